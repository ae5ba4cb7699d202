#pragma once

#include <optional>
#include <string>

#include "noetherres/dim3.hpp"
#include "noetherres/poly_io.hpp"

namespace nres {

struct MatrixInput {
    std::vector<std::vector<std::uint32_t>> matrix;
    std::optional<std::uint32_t> characteristic; // from JSON inputs only
};

struct GeneratorInput {
    std::size_t n = 0;
    WeightVector weights;
    std::size_t d = 0;
    std::vector<std::string> polynomials; // raw lines, parsed against a field later
};

/// Either a `d n` + rows matrix file (or JSON {"char":c,"matrix":[[..]]})
/// or a generator file with n: / w: / d: headers and one polynomial per line.
struct ParsedInput {
    std::optional<MatrixInput> matrix;
    std::optional<GeneratorInput> generators;
};

ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

std::vector<Polynomial> parse_generators(const GeneratorInput& g, const FieldSpec& F,
                                         const MonomialOrder& ord);

std::string resolution_to_json(const GradedFreeResolution& res);
GradedFreeResolution resolution_from_json(const std::string& text);

std::string betti_to_json(const BettiTable& t);
std::string exceptional_sets_to_json(const ExceptionalSets& E);

} // namespace nres

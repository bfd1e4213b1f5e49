#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wcolab/moebius.hpp"
#include "wcolab/series.hpp"
#include "wcolab/weights.hpp"

namespace wcolab {

/// Complex literal "<re>", "<im>i" or "<re>+<im>i" with no spaces, e.g.
/// "1", "-0.5", "0.6i", "1+2i", "1e-3-2.5i", "i", "-i".
Complex parse_complex(const std::string& text);

std::string format_complex(Complex z);

/// Space mini-language:
///   "hardy" | "bergman:alpha=<float>" | "hgamma:gamma=<float>"
///   | "dirichlet" | "bounded-log" | "seq:<path>.json"
/// seq files hold { "gamma": [1.0, ...], "comment": optional }.
WeightSequence parse_space_spec(const std::string& spec, std::size_t n_max);

struct PhiLiteral {
  std::variant<Automorphism, TruncatedSeries> value;
  std::vector<std::string> warnings;
};

/// Self-map literal:
///   "aut:lambda=<c>,a=<c>" | "rot:theta=<radians>" | "series:<path>.json"
/// Non-unimodular lambda is renormalized; deviations above 1e-9 produce a
/// warning entry.
PhiLiteral parse_phi_literal(const std::string& text);

struct WeightLiteral {
  enum class Kind { AutoUnitary, Constant, Series } kind;
  Complex constant{};        // Kind::Constant
  TruncatedSeries series;    // Kind::Series
  std::vector<std::string> warnings;
};

/// Weight literal: "auto-unitary" | "const:<c>" | "series:<path>.json".
WeightLiteral parse_weight_literal(const std::string& text);

/// Series file { "re": [...], "im": [...] } of equal nonzero length.
TruncatedSeries load_series_json(const std::string& path);

/// Weight file { "gamma": [...] }; gamma(0) must be 1.0.
std::vector<double> load_gamma_json(const std::string& path);

}  // namespace wcolab

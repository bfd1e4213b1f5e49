#include "wcolab/parse.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wcolab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

// Reads a signed double starting at pos; advances pos past it.
double read_double(const std::string& s, std::size_t& pos) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) bad("complex literal: expected a number in '" + s + "'");
  pos += std::size_t(end - begin);
  return v;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return j;
}

std::string expect_prefix(const std::string& text, const std::string& prefix) {
  if (text.rfind(prefix, 0) != 0) bad("expected prefix '" + prefix + "' in " + text);
  return text.substr(prefix.size());
}

double parse_double_value(const std::string& text) {
  std::size_t pos = 0;
  const double v = read_double(text, pos);
  if (pos != text.size()) bad("trailing characters in number '" + text + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) bad("empty complex literal");

  // Bare "i" forms first.
  if (text == "i" || text == "+i") return Complex{0.0, 1.0};
  if (text == "-i") return Complex{0.0, -1.0};

  std::size_t pos = 0;
  const double first = read_double(text, pos);
  if (pos == text.size()) return Complex{first, 0.0};
  if (text[pos] == 'i') {
    if (pos + 1 != text.size()) bad("trailing characters in '" + text + "'");
    return Complex{0.0, first};
  }
  // "<re><sign><im>i" with the sign owned by the second number, or
  // "<re>+i" / "<re>-i".
  if (text.compare(pos, 2, "+i") == 0 && pos + 2 == text.size())
    return Complex{first, 1.0};
  if (text.compare(pos, 2, "-i") == 0 && pos + 2 == text.size())
    return Complex{first, -1.0};
  const double second = read_double(text, pos);
  if (pos == text.size() || text[pos] != 'i' || pos + 1 != text.size())
    bad("complex literal '" + text + "' must end in 'i'");
  return Complex{first, second};
}

std::string format_complex(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();  // drop negative zero
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::ostringstream os;
  os << re << (im < 0 ? "" : "+") << im << "i";
  return os.str();
}

WeightSequence parse_space_spec(const std::string& spec, std::size_t n_max) {
  if (spec == "hardy") return WeightSequence::hardy(n_max);
  if (spec == "dirichlet") return WeightSequence::dirichlet_classical(n_max);
  if (spec == "bounded-log") return WeightSequence::bounded_log(n_max);
  if (spec.rfind("bergman:", 0) == 0)
    return WeightSequence::bergman(
        parse_double_value(expect_prefix(expect_prefix(spec, "bergman:"), "alpha=")),
        n_max);
  if (spec.rfind("hgamma:", 0) == 0)
    return WeightSequence::hgamma(
        parse_double_value(expect_prefix(expect_prefix(spec, "hgamma:"), "gamma=")),
        n_max);
  if (spec.rfind("seq:", 0) == 0)
    return WeightSequence::from_list(load_gamma_json(spec.substr(4)));
  bad("unknown space spec '" + spec +
      "' (expected hardy | bergman:alpha=.. | hgamma:gamma=.. | dirichlet | "
      "bounded-log | seq:<path>)");
}

PhiLiteral parse_phi_literal(const std::string& text) {
  if (text.rfind("rot:", 0) == 0) {
    const double theta =
        parse_double_value(expect_prefix(expect_prefix(text, "rot:"), "theta="));
    return PhiLiteral{Automorphism::rotation(std::polar(1.0, theta)), {}};
  }
  if (text.rfind("aut:", 0) == 0) {
    const std::string body = text.substr(4);
    const std::size_t comma = body.find(",a=");
    if (comma == std::string::npos || body.rfind("lambda=", 0) != 0)
      bad("automorphism literal must look like aut:lambda=<c>,a=<c>");
    const Complex lambda = parse_complex(body.substr(7, comma - 7));
    const Complex a = parse_complex(body.substr(comma + 3));
    PhiLiteral out{Automorphism(lambda, a), {}};
    if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
      out.warnings.push_back("lambda renormalized to unit modulus (|lambda|=" +
                             std::to_string(std::abs(lambda)) + ")");
    return out;
  }
  if (text.rfind("series:", 0) == 0)
    return PhiLiteral{load_series_json(text.substr(7)), {}};
  bad("unknown self-map literal '" + text +
      "' (expected aut:lambda=..,a=.. | rot:theta=.. | series:<path>)");
}

WeightLiteral parse_weight_literal(const std::string& text) {
  if (text == "auto-unitary")
    return WeightLiteral{WeightLiteral::Kind::AutoUnitary, {},
                         TruncatedSeries::zero(1), {}};
  if (text.rfind("const:", 0) == 0) {
    WeightLiteral out{WeightLiteral::Kind::Constant, parse_complex(text.substr(6)),
                      TruncatedSeries::zero(1), {}};
    if (out.constant == Complex{}) bad("const weight must be nonzero");
    return out;
  }
  if (text.rfind("series:", 0) == 0)
    return WeightLiteral{WeightLiteral::Kind::Series, {},
                         load_series_json(text.substr(7)), {}};
  bad("unknown weight literal '" + text +
      "' (expected auto-unitary | const:<c> | series:<path>)");
}

TruncatedSeries load_series_json(const std::string& path) {
  const json j = load_json_file(path);
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    bad(path + ": series file needs arrays 're' and 'im'");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    bad(path + ": 're' and 'im' must be nonempty arrays of equal length");
  std::vector<Complex> c(re.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = Complex{re[i].get<double>(), im[i].get<double>()};
  return TruncatedSeries(std::move(c));
}

std::vector<double> load_gamma_json(const std::string& path) {
  const json j = load_json_file(path);
  if (!j.is_object() || !j.contains("gamma") || !j.at("gamma").is_array())
    bad(path + ": weight file needs an array 'gamma'");
  std::vector<double> g;
  for (const auto& v : j.at("gamma")) g.push_back(v.get<double>());
  return g;
}

}  // namespace wcolab

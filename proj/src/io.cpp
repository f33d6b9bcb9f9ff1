#include <superklr/io.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace superklr {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& text, char sep,
                                    const char* what) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream stream(text);
  while (std::getline(stream, piece, sep)) out.push_back(trimmed(piece));
  if (!text.empty() && text.back() == sep) out.push_back("");
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  for (const std::string& p : out)
    if (p.empty())
      throw std::invalid_argument(std::string("empty entry in ") + what + ": \"" +
                                  text + "\"");
  return out;
}

long parse_long(const std::string& piece, const char* what) {
  try {
    std::size_t pos = 0;
    const long long value = std::stoll(piece, &pos);
    if (pos != piece.size()) throw std::invalid_argument(piece);
    if (value < std::numeric_limits<long>::min() ||
        value > std::numeric_limits<long>::max())
      throw std::out_of_range(piece);
    return static_cast<long>(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("expected an integer for ") + what +
                                ", got \"" + piece + "\"");
  }
}

Parity parse_parity_name(const std::string& name) {
  if (name == "even") return Parity::even;
  if (name == "odd") return Parity::odd;
  throw std::invalid_argument("parity entries must be \"even\" or \"odd\", got \"" +
                              name + "\"");
}

}  // namespace

RawConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object())
    throw std::invalid_argument("config must be a JSON object");

  RawConfig config;
  if (!j.contains("labels") || !j["labels"].is_array())
    throw std::invalid_argument("config needs a \"labels\" array of strings");
  for (const auto& entry : j["labels"]) {
    if (!entry.is_string())
      throw std::invalid_argument("config \"labels\" entries must be strings");
    config.labels.push_back(entry.get<std::string>());
  }

  if (!j.contains("cartan") || !j["cartan"].is_array())
    throw std::invalid_argument("config needs a \"cartan\" array of integer rows");
  for (const auto& row : j["cartan"]) {
    if (!row.is_array())
      throw std::invalid_argument("config \"cartan\" rows must be arrays");
    std::vector<long> out_row;
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw std::invalid_argument("config \"cartan\" entries must be integers");
      out_row.push_back(entry.get<long>());
    }
    config.cartan.push_back(std::move(out_row));
  }

  if (!j.contains("parity") || !j["parity"].is_array())
    throw std::invalid_argument("config needs a \"parity\" array");
  for (const auto& entry : j["parity"]) {
    if (!entry.is_string())
      throw std::invalid_argument("config \"parity\" entries must be strings");
    config.parity.push_back(parse_parity_name(entry.get<std::string>()));
  }

  if (j.contains("symmetrizer")) {
    if (!j["symmetrizer"].is_array())
      throw std::invalid_argument("config \"symmetrizer\" must be an array");
    std::vector<long> d;
    for (const auto& entry : j["symmetrizer"]) {
      if (!entry.is_number_integer())
        throw std::invalid_argument("config \"symmetrizer\" entries must be integers");
      d.push_back(entry.get<long>());
    }
    config.symmetrizer = std::move(d);
  }
  return config;
}

CartanSuperdatum load_config(const std::string& path) {
  RawConfig c = read_config(path);
  return make_superdatum(std::move(c.labels), std::move(c.cartan),
                         std::move(c.parity), c.symmetrizer);
}

DominantWeight parse_weight(const CartanSuperdatum& datum, const std::string& text) {
  DominantWeight weight;
  for (const std::string& piece : split_list(text, ',', "weight"))
    weight.push_back(parse_long(piece, "a weight coordinate"));
  check_weight(datum, weight);
  return weight;
}

WeightSeq parse_weight_seq(const CartanSuperdatum& datum, const std::string& text) {
  WeightSeq nu;
  for (const std::string& piece : split_list(text, ',', "label sequence"))
    nu.push_back(datum.index_of(piece));
  return nu;
}

RootVector parse_root_vector(const CartanSuperdatum& datum, const std::string& text) {
  RootVector beta(datum.rank(), 0);
  for (const std::string& piece : split_list(text, ',', "multiplicity vector")) {
    const auto pair = split_list(piece, ':', "label:mult pair");
    if (pair.size() != 2)
      throw std::invalid_argument("expected label:mult, got \"" + piece + "\"");
    const long mult = parse_long(pair[1], "a multiplicity");
    if (mult < 0) throw std::invalid_argument("negative multiplicity in \"" + piece + "\"");
    beta[static_cast<std::size_t>(datum.index_of(pair[0]))] += mult;
  }
  return beta;
}

TildeBlocks parse_blocks(const CartanSuperdatum& datum, const std::string& text) {
  TildeBlocks blocks;
  for (const std::string& piece : split_list(text, ',', "block list")) {
    const auto pair = split_list(piece, ':', "label:mult pair");
    if (pair.size() != 2)
      throw std::invalid_argument("expected label:mult, got \"" + piece + "\"");
    blocks.block_label.push_back(datum.index_of(pair[0]));
    blocks.block_mult.push_back(parse_long(pair[1], "a block multiplicity"));
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Element grammar

namespace {

struct Cursor {
  const std::string& text;
  std::size_t at = 0;

  void skip_ws() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at])))
      ++at;
  }
  bool done() {
    skip_ws();
    return at >= text.size();
  }
  char peek() {
    skip_ws();
    return at < text.size() ? text[at] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("element syntax error at position " +
                                std::to_string(at) + ": " + why);
  }
  long number(const char* what) {
    skip_ws();
    std::size_t start = at;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
      ++at;
    if (at == start) fail(std::string("expected ") + what);
    return parse_long(text.substr(start, at - start), what);
  }
};

Rational parse_rational(Cursor& cur) {
  const long num = cur.number("a number");
  if (cur.peek() != '/') return Rational(num);
  ++cur.at;
  const long den = cur.number("a denominator");
  if (den == 0) cur.fail("zero denominator");
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

OnhElement<Rational> parse_factor(Cursor& cur, int n) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    auto out = OnhElement<Rational>::one(n);
    out *= parse_rational(cur);
    return out;
  }
  if (c == 'x') {
    ++cur.at;
    const long index = cur.number("a generator index");
    long power = 1;
    if (cur.peek() == '^') {
      ++cur.at;
      power = cur.number("an exponent");
      if (power > 4096) cur.fail("exponent too large");
    }
    const auto gen = OnhElement<Rational>::x(n, static_cast<int>(index));
    auto out = OnhElement<Rational>::one(n);
    for (long rep = 0; rep < power; ++rep) out = multiply_free(out, gen);
    return out;
  }
  if (c == 't') {
    ++cur.at;
    if (cur.peek() != '[') cur.fail("expected '[' after t");
    ++cur.at;
    auto out = OnhElement<Rational>::one(n);
    if (cur.peek() != ']') {
      while (true) {
        const long letter = cur.number("a crossing index");
        out = multiply_free(out, OnhElement<Rational>::tau(n, static_cast<int>(letter)));
        if (cur.peek() == ',') {
          ++cur.at;
          continue;
        }
        break;
      }
    }
    if (cur.peek() != ']') cur.fail("expected ']' closing the crossing word");
    ++cur.at;
    return out;
  }
  cur.fail("expected a coefficient, x<k>, or t[...]");
}

}  // namespace

OnhElement<Rational> parse_onh_element(int n, const std::string& text) {
  Cursor cur{text};
  auto total = OnhElement<Rational>::zero(n);
  if (cur.done()) cur.fail("empty element");
  bool negative = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    negative = cur.peek() == '-';
    ++cur.at;
  }
  while (true) {
    auto term = parse_factor(cur, n);
    while (cur.peek() == '*') {
      ++cur.at;
      term = multiply_free(term, parse_factor(cur, n));
    }
    if (negative) term *= Rational(-1);
    total += term;
    if (cur.done()) return total;
    const char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+', '-', or '*'");
    negative = op == '-';
    ++cur.at;
  }
}

// ---------------------------------------------------------------------------
// Rendering

std::string seq_text(const CartanSuperdatum& datum, const WeightSeq& nu) {
  std::string out;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i > 0) out += ',';
    out += datum.labels[static_cast<std::size_t>(nu[i])];
  }
  return out;
}

nlohmann::json big_json(const BigInt& value) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(value) < limit) return nlohmann::json(value.get_si());
  return nlohmann::json(value.get_str());
}

nlohmann::json qpi_json(const QPiPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  auto it = p.terms().begin();
  while (it != p.terms().end()) {
    const long q = it->first.q;
    BigInt even = 0, odd = 0;
    for (; it != p.terms().end() && it->first.q == q; ++it)
      (it->first.par == Parity::even ? even : odd) = it->second;
    terms.push_back({{"q", q}, {"even", big_json(even)}, {"odd", big_json(odd)}});
  }
  return {{"terms", std::move(terms)}};
}

nlohmann::json laurent_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [q, coeff] : p.terms())
    terms.push_back({{"q", q}, {"coeff", big_json(coeff)}});
  return {{"terms", std::move(terms)}};
}

namespace {

std::string monomial_text(const std::vector<long>& exps,
                          const std::vector<int>& word, bool tau_first) {
  std::string xs;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (!xs.empty()) xs += '*';
    xs += "x" + std::to_string(k + 1);
    if (exps[k] > 1) xs += "^" + std::to_string(exps[k]);
  }
  std::string ts;
  if (!word.empty()) {
    ts = "t[";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0) ts += ',';
      ts += std::to_string(word[i]);
    }
    ts += ']';
  }
  if (xs.empty() && ts.empty()) return "1";
  if (xs.empty()) return ts;
  if (ts.empty()) return xs;
  return tau_first ? ts + "*" + xs : xs + "*" + ts;
}

}  // namespace

std::string onh_element_text(const OnhElement<Rational>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : e.terms()) {
    const std::string mono =
        monomial_text(key.exps, Permutation(key.w_images).min_reduced_word(), false);
    const bool negative = coeff < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(coeff);
    if (mag == 1 && mono != "1")
      out += mono;
    else if (mono == "1")
      out += mag.get_str();
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

nlohmann::json onh_element_json(const OnhElement<Rational>& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : e.terms()) {
    nlohmann::json term;
    term["coeff"] = coeff.get_str();
    term["exps"] = key.exps;
    term["word"] = Permutation(key.w_images).min_reduced_word();
    terms.push_back(std::move(term));
  }
  return {{"terms", std::move(terms)}};
}

std::string monomial_label_text(const MonomialLabel& label, bool tau_first) {
  return monomial_text(label.exponents, label.w.min_reduced_word(), tau_first);
}

nlohmann::json monomial_label_json(const MonomialLabel& label) {
  nlohmann::json out;
  out["exps"] = label.exponents;
  out["word"] = label.w.min_reduced_word();
  out["degree"] = label.degree;
  out["parity"] = parity_bit(label.par);
  return out;
}

}  // namespace superklr

#include "krl/poly_json.hpp"

#include <stdexcept>

namespace krl {

nlohmann::json to_json(const KineticPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"bt", m.bt}, {"bx", m.bx}, {"bv", m.bv}, {"c", c.get_str()}});
  }
  return {{"n", p.n()}, {"terms", terms}};
}

KineticPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON needs fields 'n' and 'terms'");
  }
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
  KineticPolynomial p(static_cast<std::size_t>(n));
  for (const auto& t : j.at("terms")) {
    MultiIndex m = MultiIndex::zero(static_cast<std::size_t>(n));
    m.bt = t.value("bt", 0);
    if (t.contains("bx")) m.bx = t.at("bx").get<std::vector<int>>();
    if (t.contains("bv")) m.bv = t.at("bv").get<std::vector<int>>();
    if (m.bx.size() != static_cast<std::size_t>(n) || m.bv.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("exponent vectors must have length n");
    }
    if (m.bt < 0) throw std::invalid_argument("negative exponent");
    for (int e : m.bx)
      if (e < 0) throw std::invalid_argument("negative exponent");
    for (int e : m.bv)
      if (e < 0) throw std::invalid_argument("negative exponent");
    const auto& c = t.at("c");
    mpq_class q;
    if (c.is_string()) {
      q = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      q = mpq_class(c.get<long>());
    } else if (c.is_number()) {
      q = to_rational(c.get<double>());
    } else {
      throw std::invalid_argument("coefficient must be a string or a number");
    }
    p.add_term(m, q);
  }
  return p;
}

}  // namespace krl

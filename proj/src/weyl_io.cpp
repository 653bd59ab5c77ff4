#include "anosov/weyl_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace anosov {
namespace {

using nlohmann::json;

json encode(double gamma, const WeylTerms& terms) {
  json records = json::array();
  for (const auto& [nu, c] : terms) {
    records.push_back({{"nu", {nu[0], nu[1]}}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"gamma", gamma}, {"terms", std::move(records)}};
}

std::pair<double, WeylTerms> decode(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const double gamma = doc.at("gamma").get<double>();
    WeylTerms terms;
    for (const auto& rec : doc.at("terms")) {
      const auto& nu = rec.at("nu");
      if (!nu.is_array() || nu.size() != 2) throw std::invalid_argument("nu must be a pair of integers");
      const WeylIndex idx{nu[0].get<std::int64_t>(), nu[1].get<std::int64_t>()};
      if (!terms.emplace(idx, Complex(rec.at("re").get<double>(), rec.at("im").get<double>())).second) {
        throw std::invalid_argument("duplicate Weyl index");
      }
    }
    return {gamma, std::move(terms)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed Weyl JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const WeylPolynomial& a) { return encode(a.gamma(), a.terms()).dump(); }

std::string to_json(const StateFunctional& f) { return encode(f.gamma(), f.values()).dump(); }

WeylPolynomial polynomial_from_json(std::string_view text) {
  auto [gamma, terms] = decode(text);
  return {gamma, std::move(terms)};
}

StateFunctional state_from_json(std::string_view text) {
  auto [gamma, terms] = decode(text);
  return {gamma, std::move(terms)};
}

}  // namespace anosov

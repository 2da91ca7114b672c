#include "weylccr/json_io.hpp"

#include "weylccr/error.hpp"

namespace weylccr::json_io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorKind::InvalidArgument, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorKind::InvalidArgument, "polynomial must be a {power: coefficient} object");
  std::vector<Rational> coeffs;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    unsigned long power = 0;
    try {
      power = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || power > 64) raise(ErrorKind::InvalidArgument, "bad tau power '" + key + "'");
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] = rational_from_json(value);
  }
  return Polynomial(std::move(coeffs));
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::object();
  for (std::size_t k = 0; k < p.coefficients().size(); ++k)
    if (p.coefficients()[k] != 0) out[std::to_string(k)] = to_json(p.coefficients()[k]);
  return out;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) raise(ErrorKind::InvalidArgument, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  raise(ErrorKind::InvalidArgument, "expected a rational string \"p/q\", got " + j.dump());
}

json to_json(const ExactScalar& x) {
  if (x.is_rational()) return to_json(x.as_rational());
  return json{{"num", polynomial_to_json(x.numerator())}, {"den", polynomial_to_json(x.denominator())}};
}

ExactScalar scalar_from_json(const json& j) {
  if (j.is_object())
    return ExactScalar(polynomial_from_json(require(j, "num")),
                       j.contains("den") ? polynomial_from_json(j.at("den")) : Polynomial(Rational(1)));
  return ExactScalar(rational_from_json(j));
}

json to_json(const ExactVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

ExactVector vector_from_json(const json& j) {
  if (!j.is_array()) raise(ErrorKind::InvalidArgument, "expected an array of exact scalars");
  ExactVector out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

json to_json(const Frame& frame) {
  json rows = json::array();
  for (std::size_t i = 0; i < frame.dimension(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < frame.dimension(); ++k) row.push_back(to_json(frame.basis()(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"d", frame.dimension()}, {"E", std::move(rows)}};
}

FramePtr frame_from_json(const json& j) {
  const auto d = require(j, "d").get<long long>();
  if (d <= 0) raise(ErrorKind::InvalidArgument, "frame dimension must be positive");
  const json& rows = require(j, "E");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d))
    raise(ErrorKind::InvalidArgument, "frame E must have d rows");
  ExactMatrix basis(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ExactVector row = vector_from_json(rows[i]);
    if (row.size() != basis.size()) raise(ErrorKind::InvalidArgument, "frame E must be square");
    for (std::size_t k = 0; k < row.size(); ++k) basis(i, k) = row[k];
  }
  return Frame::make(std::move(basis));
}

json to_json(const Element& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back(json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"re", c.real()}, {"im", c.imag()}});
  return json{{"frame", to_json(*x.frame())}, {"terms", std::move(terms)}};
}

Element element_from_json(const json& j) {
  Element out(frame_from_json(require(j, "frame")));
  for (const auto& t : require(j, "terms")) {
    const double re = t.value("re", 0.0);
    const double im = t.value("im", 0.0);
    out.add_term(Monomial{vector_from_json(require(t, "a")), vector_from_json(require(t, "b"))}, Complex(re, im));
  }
  return out;
}

json to_json(const BohrCharacter& chi) {
  switch (chi.kind()) {
    case BohrCharacter::Kind::Continuous: return json{{"kind", "continuous"}, {"p", to_json(chi.momentum())}};
    case BohrCharacter::Kind::Padic: return json{{"kind", "padic"}, {"primes", chi.primes()}};
    case BohrCharacter::Kind::Product: {
      json factors = json::array();
      for (const auto& f : chi.factors()) factors.push_back(to_json(f));
      return json{{"kind", "product"}, {"factors", std::move(factors)}};
    }
  }
  return {};
}

BohrCharacter character_from_json(const json& j) {
  const auto kind = require(j, "kind").get<std::string>();
  if (kind == "continuous") return BohrCharacter::continuous(vector_from_json(require(j, "p")));
  if (kind == "padic") return BohrCharacter::padic(require(j, "primes").get<std::vector<unsigned long>>());
  if (kind == "product") {
    std::vector<BohrCharacter> factors;
    for (const auto& f : require(j, "factors")) factors.push_back(character_from_json(f));
    return BohrCharacter::product(std::move(factors));
  }
  raise(ErrorKind::InvalidArgument, "unknown character kind '" + kind + "'");
}

json to_json(const StateModel& s) {
  struct Visitor {
    json operator()(const PlaneWave& w) const { return {{"family", "plane_wave"}, {"p", to_json(w.p)}}; }
    json operator()(const BohrState& b) const { return {{"family", "bohr"}, {"character", to_json(b.character)}}; }
    json operator()(const Bloch& b) const {
      json fhat = json::array();
      for (const auto& [g, c] : b.fhat) fhat.push_back(json{{"idx", g}, {"re", c.real()}, {"im", c.imag()}});
      return {{"family", "bloch"}, {"kappa", rationals_to_json(b.kappa)}, {"fhat", std::move(fhat)}};
    }
    json operator()(const Zak& z) const {
      return {{"family", "zak"}, {"kappa", rationals_to_json(z.kappa)}, {"nu", rationals_to_json(z.nu)}};
    }
    json operator()(const Fock&) const { return {{"family", "fock"}}; }
    json operator()(const Tracial&) const { return {{"family", "tracial"}}; }
    json operator()(const Mixture& m) const {
      json comps = json::array();
      for (std::size_t i = 0; i < m.components.size(); ++i)
        comps.push_back(json{{"weight", m.weights[i]}, {"state", to_json(m.components[i])}});
      return {{"family", "mixture"}, {"components", std::move(comps)}};
    }
  };
  return std::visit(Visitor{}, s.variant());
}

StateModel state_from_json(const json& j) {
  const auto family = require(j, "family").get<std::string>();
  if (family == "plane_wave") return StateModel::plane_wave(vector_from_json(require(j, "p")));
  if (family == "bohr") return StateModel::bohr(character_from_json(require(j, "character")));
  if (family == "padic")
    return StateModel::bohr(BohrCharacter::padic(require(j, "primes").get<std::vector<unsigned long>>()));
  if (family == "bloch") {
    FourierData fhat;
    for (const auto& t : require(j, "fhat")) {
      auto idx = require(t, "idx").get<FourierIndex>();
      const Complex c(t.value("re", 0.0), t.value("im", 0.0));
      if (!fhat.emplace(std::move(idx), c).second) raise(ErrorKind::InvalidArgument, "duplicate Fourier index");
    }
    return StateModel::bloch(rationals_from_json(require(j, "kappa")), std::move(fhat));
  }
  if (family == "zak") return StateModel::zak(rationals_from_json(require(j, "kappa")), rationals_from_json(require(j, "nu")));
  if (family == "fock") return StateModel::fock();
  if (family == "tracial") return StateModel::tracial();
  if (family == "mixture") {
    std::vector<double> weights;
    std::vector<StateModel> comps;
    for (const auto& c : require(j, "components")) {
      weights.push_back(require(c, "weight").get<double>());
      comps.push_back(state_from_json(require(c, "state")));
    }
    return StateModel::mixture(std::move(weights), std::move(comps));
  }
  raise(ErrorKind::InvalidArgument, "unknown state family '" + family + "'");
}

json to_json(const CheckReport& r) {
  return json{{"check", r.check}, {"pass", r.pass}, {"worst_value", r.worst_value}, {"worst_probe", r.worst_probe}};
}

}  // namespace weylccr::json_io

#include "idio/serialize.hpp"

#include <stdexcept>
#include <string>

namespace idio {

namespace {

Integer parse_integer(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("invalid integer: " + s);
  return v;
}

}  // namespace

void to_json(nlohmann::json& j, const MPoly& p) {
  j = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    const Exponents e = MPoly::unpack(t.key);
    j.push_back({{"dX", e.x}, {"dy", e.y}, {"dz", e.z}, {"coeff", t.coeff.get_str()}});
  }
}

void from_json(const nlohmann::json& j, MPoly& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MPoly sum;
  for (const auto& t : j) {
    Exponents e{t.at("dX").get<unsigned>(), t.at("dy").get<unsigned>(), t.at("dz").get<unsigned>()};
    sum += MPoly::monomial(parse_integer(t.at("coeff").get<std::string>()), e);
  }
  p = std::move(sum);
}

void to_json(nlohmann::json& j, const Deck& d) { j = {{"k", d.k}, {"polys", d.polys}}; }

void from_json(const nlohmann::json& j, Deck& d) {
  j.at("k").get_to(d.k);
  j.at("polys").get_to(d.polys);
}

void to_json(nlohmann::json& j, const TheoremVerdict& v) {
  j = {{"flag_free_g", v.flag_free_g},
       {"flag_free_h", v.flag_free_h},
       {"deck3_equal", v.deck3_equal},
       {"idio_equal", v.idio_equal},
       {"violation", v.violation}};
}

void from_json(const nlohmann::json& j, TheoremVerdict& v) {
  j.at("flag_free_g").get_to(v.flag_free_g);
  j.at("flag_free_h").get_to(v.flag_free_h);
  j.at("deck3_equal").get_to(v.deck3_equal);
  j.at("idio_equal").get_to(v.idio_equal);
  j.at("violation").get_to(v.violation);
}

void to_json(nlohmann::json& j, const CounterexampleReport& r) {
  j = {{"n", r.n},
       {"det_diff", r.det_diff.get_str()},
       {"deck_all_equal", r.deck_all_equal},
       {"global_idio_equal", r.global_idio_equal},
       {"flags_found", r.flags_found}};
}

void from_json(const nlohmann::json& j, CounterexampleReport& r) {
  j.at("n").get_to(r.n);
  r.det_diff = parse_integer(j.at("det_diff").get<std::string>());
  j.at("deck_all_equal").get_to(r.deck_all_equal);
  j.at("global_idio_equal").get_to(r.global_idio_equal);
  j.at("flags_found").get_to(r.flags_found);
}

}  // namespace idio

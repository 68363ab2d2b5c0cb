#pragma once

// JSON records shared by the library and the command-line tool. Rationals
// are always "p/q" strings.

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "kuniform/enumerators.hpp"
#include "kuniform/exact.hpp"
#include "kuniform/hetero.hpp"
#include "kuniform/oracle.hpp"
#include "kuniform/uniform_bounds.hpp"

namespace kuniform {

using json = nlohmann::ordered_json;

inline json rat_array(const std::vector<Rat>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline std::vector<Rat> rats_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of \"p/q\" strings");
  std::vector<Rat> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw std::invalid_argument("rationals must be \"p/q\" strings");
    out.push_back(parse_rat(v.get<std::string>()));
  }
  return out;
}

/// {"n": N, "d": d, "coeffs": ["p/q", ...]}
template <class Record>
json enumerator_to_json(const Record& r) {
  return json{{"n", r.n()}, {"d", r.d()}, {"coeffs", rat_array(r.coeffs())}};
}

template <class Record>
Record enumerator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("coeffs"))
    throw std::invalid_argument("enumerator record needs n, d and coeffs");
  return Record(j.at("n").get<int>(), j.at("d").get<int>(), rats_from_json(j.at("coeffs")));
}

inline json profile_to_json(const DimensionProfile& p) { return json(p.dims()); }

/// Accepts a compact string "3x1,2x10" or an array of dimensions.
inline DimensionProfile profile_from_json(const json& j) {
  if (j.is_string()) return parse_profile(j.get<std::string>());
  if (!j.is_array()) throw std::invalid_argument("profile must be a string or an array");
  std::vector<int> dims;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("profile entries must be integers");
    dims.push_back(v.get<int>());
  }
  return DimensionProfile(std::move(dims));
}

/// {"dims": [...], "amps": [{"ket": [...], "re": "p/q", "im": "p/q"}, ...]}
inline PureState state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("amps"))
    throw std::invalid_argument("state file needs dims and amps");
  auto profile = profile_from_json(j.at("dims"));
  if (!j.at("amps").is_array()) throw std::invalid_argument("amps must be an array");
  std::map<Ket, GaussRat> amps;
  for (const auto& entry : j.at("amps")) {
    if (!entry.is_object() || !entry.contains("ket")) throw std::invalid_argument("amplitude entry needs a ket");
    auto ket = entry.at("ket").get<Ket>();
    auto part = [&](const char* key) {
      if (!entry.contains(key)) return Rat(0);
      if (!entry.at(key).is_string()) throw std::invalid_argument("amplitude parts must be \"p/q\" strings");
      return parse_rat(entry.at(key).get<std::string>());
    };
    if (amps.contains(ket)) throw std::invalid_argument("duplicate ket in state file");
    amps.emplace(std::move(ket), GaussRat(part("re"), part("im")));
  }
  return PureState(std::move(profile), std::move(amps));
}

inline PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed state file: " + std::string(e.what()));
  }
  return state_from_json(j);
}

inline json state_to_json(const PureState& psi) {
  json amps = json::array();
  for (const auto& [ket, a] : psi.amplitudes())
    amps.push_back({{"ket", ket}, {"re", to_string(a.re)}, {"im", to_string(a.im)}});
  return json{{"dims", psi.profile().dims()}, {"amps", std::move(amps)}};
}

inline json bound_to_json(const BoundVerdict& v) {
  json j{{"N", v.n}, {"d", v.d}, {"k_max", v.k_max}, {"provenance", to_string(v.provenance)}};
  if (v.alpha_index) j["alpha_index"] = *v.alpha_index;
  if (v.witness) j["alpha"] = to_string(*v.witness);
  if (v.vanishing_index) j["vanishing_index"] = *v.vanishing_index;
  return j;
}

inline json shadow_to_json(const HeteroShadow& s) {
  json j{{"profile", s.profile.compact()}, {"a_prime", rat_array(s.a_prime)}, {"s", rat_array(s.s)}};
  if (auto neg = s.first_negative()) j["first_negative"] = *neg;
  return j;
}

inline json ame_to_json(const AmeVerdict& v) {
  json j{{"profile", v.profile.compact()}, {"parties", v.profile.parties()}, {"status", to_string(v.status)}};

  json cert{{"kind", to_string(v.certificate)}};
  if (v.certificate == CertificateKind::scott_witness) {
    cert["via"] = v.via;
    cert["subset"] = v.scott->subset;
    cert["lhs"] = to_string(v.scott->lhs);
  } else if (v.certificate == CertificateKind::shadow_negative) {
    cert["j"] = *v.shadow_index;
    cert["s_j"] = to_string(v.shadow->s[*v.shadow_index]);
  }
  if (v.status == AmeStatus::nonexistent) j["certificate"] = std::move(cert);

  json tests = json::array();
  tests.push_back({{"test", "schmidt"}, {"passed", v.status != AmeStatus::infeasible}});
  if (v.status != AmeStatus::infeasible) {
    if (v.split) {
      json c{{"test", "closed-form"}, {"d1", v.split->d1}, {"d2", v.split->d2}, {"n", v.split->n}};
      if (v.closed_form_min_n) c["min_n"] = *v.closed_form_min_n;
      c["certifies"] = v.via == "closed-form";
      tests.push_back(std::move(c));
    }
    if (v.scott_searched) {
      json s{{"test", "scott-search"}, {"witness_found", v.scott.has_value()}};
      if (v.scott) {
        s["subset"] = v.scott->subset;
        s["lhs"] = to_string(v.scott->lhs);
      }
      tests.push_back(std::move(s));
    }
    if (v.shadow) {
      json s{{"test", "shadow"}, {"s", rat_array(v.shadow->s)}};
      if (v.shadow_index) s["first_negative"] = *v.shadow_index;
      tests.push_back(std::move(s));
    } else if (v.profile.parties() % 2 == 0) {
      tests.push_back({{"test", "shadow"}, {"skipped", "even number of parties"}});
    }
  }
  j["tests"] = std::move(tests);
  return j;
}

}  // namespace kuniform

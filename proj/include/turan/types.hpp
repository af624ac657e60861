#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/errors.hpp"
#include "turan/unit.hpp"

namespace turan {

/// An upper bound a construction promises: |S(nu)| <= bound for 1 <= nu <= nu_hi.
struct UpperClaim {
  double bound = 0.0;
  std::uint64_t nu_hi = 0;
  std::string label;

  bool operator==(const UpperClaim&) const = default;
};

/// Which construction produced a tuple and with what parameters.
struct Provenance {
  std::string kind;
  std::map<std::string, std::int64_t> params;
  std::optional<UpperClaim> claim;

  bool operator==(const Provenance&) const = default;
};

/// n roots of unity z_k = e(angles[k] / order), all over one common order M.
struct RootTuple {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> angles;
  Provenance provenance;

  std::size_t size() const noexcept { return angles.size(); }
  bool operator==(const RootTuple&) const = default;
};

/// Arbitrary complex n-tuple.
struct FloatTuple {
  std::vector<cplx> values;
  Provenance provenance;

  std::size_t size() const noexcept { return values.size(); }
};

/// |S(nu)| for nu in [nu_lo, nu_hi]; sums[i] is S(nu_lo + i).
struct PowerSumProfile {
  std::uint64_t nu_lo = 1;
  std::uint64_t nu_hi = 0;
  std::vector<cplx> sums;
  std::vector<double> abs;
  std::uint64_t argmax_nu = 0;  // least nu attaining max_abs
  double max_abs = 0.0;

  double at(std::uint64_t nu) const { return abs.at(nu - nu_lo); }
  cplx sum_at(std::uint64_t nu) const { return sums.at(nu - nu_lo); }
};

inline void validate(const RootTuple& t) {
  if (t.order == 0) throw domain_error("RootTuple: order must be positive");
  for (auto a : t.angles)
    if (a >= t.order) throw domain_error("RootTuple: angle outside [0, order)");
}

inline FloatTuple to_float(const RootTuple& t) {
  FloatTuple out;
  out.values.reserve(t.size());
  for (auto a : t.angles) out.values.push_back(unit_root(a, t.order));
  out.provenance = t.provenance;
  return out;
}

/// Divides order and all angles by their common gcd.
inline RootTuple normalized(const RootTuple& t) {
  std::uint64_t g = t.order;
  for (auto a : t.angles) g = std::gcd(g, a);
  RootTuple out = t;
  out.order /= g;
  for (auto& a : out.angles) a /= g;
  return out;
}

/// Tuple restricted to `indices` (positions into t.angles), same order M.
inline RootTuple sub_tuple(const RootTuple& t, const std::vector<std::size_t>& indices) {
  RootTuple out;
  out.order = t.order;
  out.angles.reserve(indices.size());
  for (auto i : indices) out.angles.push_back(t.angles.at(i));
  out.provenance = {t.provenance.kind + "/subset", t.provenance.params, std::nullopt};
  return out;
}

/// {0..n-1} minus `indices` (indices sorted or not).
inline std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<bool> drop(n, false);
  for (auto i : indices) drop.at(i) = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) out.push_back(i);
  return out;
}

// JSON forms:
//   {"kind":"root","M":int,"angles":[int],"provenance":{...}}
//   {"kind":"float","re":[...],"im":[...],"provenance":{...}}

inline void to_json(nlohmann::json& j, const UpperClaim& c) {
  j = nlohmann::json{{"bound", c.bound}, {"nu_hi", c.nu_hi}, {"label", c.label}};
}

inline void from_json(const nlohmann::json& j, UpperClaim& c) {
  j.at("bound").get_to(c.bound);
  j.at("nu_hi").get_to(c.nu_hi);
  c.label = j.value("label", std::string{});
}

inline void to_json(nlohmann::json& j, const Provenance& p) {
  j = nlohmann::json{{"kind", p.kind}, {"params", p.params}};
  if (p.claim) j["claim"] = *p.claim;
}

inline void from_json(const nlohmann::json& j, Provenance& p) {
  p.kind = j.value("kind", std::string{});
  p.params = j.value("params", std::map<std::string, std::int64_t>{});
  p.claim.reset();
  if (j.contains("claim")) p.claim = j.at("claim").get<UpperClaim>();
}

inline void to_json(nlohmann::json& j, const RootTuple& t) {
  j = nlohmann::json{{"kind", "root"}, {"M", t.order}, {"angles", t.angles}, {"provenance", t.provenance}};
}

inline void from_json(const nlohmann::json& j, RootTuple& t) {
  if (j.value("kind", std::string{}) != "root") throw domain_error("tuple JSON: expected kind \"root\"");
  j.at("M").get_to(t.order);
  j.at("angles").get_to(t.angles);
  t.provenance = j.contains("provenance") ? j.at("provenance").get<Provenance>() : Provenance{};
  validate(t);
}

inline void to_json(nlohmann::json& j, const FloatTuple& t) {
  std::vector<double> re;
  std::vector<double> im;
  for (auto z : t.values) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j = nlohmann::json{{"kind", "float"}, {"re", re}, {"im", im}, {"provenance", t.provenance}};
}

inline void from_json(const nlohmann::json& j, FloatTuple& t) {
  if (j.value("kind", std::string{}) != "float") throw domain_error("tuple JSON: expected kind \"float\"");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw domain_error("tuple JSON: re and im differ in length");
  t.values.clear();
  for (std::size_t i = 0; i < re.size(); ++i) t.values.emplace_back(re[i], im[i]);
  t.provenance = j.contains("provenance") ? j.at("provenance").get<Provenance>() : Provenance{};
}

/// 64-bit FNV-1a over the canonical (compact) JSON of the tuple, as hex.
template <class Tuple>
std::string tuple_digest(const Tuple& t) {
  const std::string text = nlohmann::json(t).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace turan

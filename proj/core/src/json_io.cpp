#include "sl3web/json_io.hpp"

#include <initializer_list>
#include <limits>
#include <string>

namespace sl3web {

namespace {

[[noreturn]] void malformed(const std::string& what, const std::string& field = {}) {
  throw Error(ErrorKind::Malformed, what, field);
}

void require_object(const Json& j, const char* type) {
  if (!j.is_object()) malformed(std::string(type) + " must be a JSON object");
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> keys,
                    const char* type) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || item.key() == k;
    if (!known) malformed(std::string(type) + ": unknown key \"" + item.key() + "\"", item.key());
  }
}

const Json& member(const Json& j, std::string_view key, const char* type) {
  auto it = j.find(std::string(key));
  if (it == j.end()) {
    malformed(std::string(type) + ": missing key \"" + std::string(key) + "\"", std::string(key));
  }
  return *it;
}

Int as_int(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
      malformed(where + " is out of the 64-bit range", where);
    }
    return static_cast<Int>(u);
  }
  if (v.is_number_integer()) return v.get<Int>();
  malformed(where + " must be a JSON integer", where);
}

Int int_member(const Json& j, std::string_view key, const char* type) {
  return as_int(member(j, key, type), std::string(key));
}

std::vector<Int> int_array(const Json& j, std::string_view key, const char* type) {
  const Json& v = member(j, key, type);
  if (!v.is_array()) malformed(std::string(key) + " must be an array", std::string(key));
  std::vector<Int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_int(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <class T>
Json eight_to_json(const T& value) {
  Json j = Json::object();
  const auto v = value.values();
  for (std::size_t i = 0; i < v.size(); ++i) j[std::string(T::kNames[i])] = v[i];
  return j;
}

template <class T>
T eight_from_json(const Json& j, const char* type) {
  require_object(j, type);
  std::array<Int, 8> v{};
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = int_member(j, T::kNames[i], type);
  reject_unknown(j,
                 {T::kNames[0], T::kNames[1], T::kNames[2], T::kNames[3], T::kNames[4],
                  T::kNames[5], T::kNames[6], T::kNames[7]},
                 type);
  return T::from_values(v);
}

Json int_list(const std::vector<Int>& v) {
  Json j = Json::array();
  for (Int x : v) j.push_back(x);
  return j;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const ShearVector& x) { return eight_to_json(x); }
Json to_json(const PantsTuple& t) { return eight_to_json(t); }

template <>
ShearVector from_json<ShearVector>(const Json& j) {
  return eight_from_json<ShearVector>(j, "ShearVector");
}

template <>
PantsTuple from_json<PantsTuple>(const Json& j) {
  return eight_from_json<PantsTuple>(j, "PantsTuple");
}

Json to_json(const TwistTuple& t) {
  return Json{{"n1", t.n1}, {"n2", t.n2}, {"t1", t.t1}, {"t2", t.t2}};
}

template <>
TwistTuple from_json<TwistTuple>(const Json& j) {
  require_object(j, "TwistTuple");
  TwistTuple t{int_member(j, "n1", "TwistTuple"), int_member(j, "n2", "TwistTuple"),
               int_member(j, "t1", "TwistTuple"), int_member(j, "t2", "TwistTuple")};
  reject_unknown(j, {"n1", "n2", "t1", "t2"}, "TwistTuple");
  return t;
}

Json to_json(const AnnulusDescriptor& d) {
  Json j = to_json(d.tuple());
  j["word0"] = d.word0().str();
  j["word1"] = d.word1().str();
  j["kind"] = std::string(to_string(d.kind()));
  return j;
}

template <>
AnnulusDescriptor from_json<AnnulusDescriptor>(const Json& j) {
  constexpr const char* type = "AnnulusDescriptor";
  require_object(j, type);
  reject_unknown(j, {"n1", "n2", "t1", "t2", "word0", "word1", "kind"}, type);
  TwistTuple t{int_member(j, "n1", type), int_member(j, "n2", type), int_member(j, "t1", type),
               int_member(j, "t2", type)};
  auto word = [&](const char* key) {
    const Json& v = member(j, key, type);
    if (!v.is_string()) malformed(std::string(key) + " must be a string", key);
    return BoundaryWord::parse(v.get<std::string>());
  };
  AnnulusDescriptor d = validate(t, word("word0"), word("word1"));
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != to_string(d.kind())) {
      malformed("kind does not match the kind derived from the coordinates", "kind");
    }
  }
  return d;
}

Json to_json(const DecompositionGraph& g) {
  Json pants = Json::array();
  for (const Pants& p : g.pants) {
    Json slots = Json::array();
    for (const Slot& s : p.slots) {
      slots.push_back(
          Json{{"curve", s.curve}, {"side", s.side}, {"flag", std::string(to_string(s.flag))}});
    }
    pants.push_back(Json{{"slots", std::move(slots)}});
  }
  return Json{{"genus", g.genus}, {"curves", int_list(g.curves)}, {"pants", std::move(pants)}};
}

template <>
DecompositionGraph from_json<DecompositionGraph>(const Json& j) {
  constexpr const char* type = "DecompositionGraph";
  require_object(j, type);
  reject_unknown(j, {"genus", "curves", "pants"}, type);
  DecompositionGraph g;
  g.genus = int_member(j, "genus", type);
  g.curves = int_array(j, "curves", type);
  const Json& pants = member(j, "pants", type);
  if (!pants.is_array()) malformed("pants must be an array", "pants");
  for (const Json& pj : pants) {
    require_object(pj, "Pants");
    reject_unknown(pj, {"slots"}, "Pants");
    const Json& slots = member(pj, "slots", "Pants");
    if (!slots.is_array() || slots.size() != 3) {
      malformed("every pants must have exactly 3 slots", "slots");
    }
    Pants p;
    for (std::size_t k = 0; k < 3; ++k) {
      const Json& sj = slots[k];
      require_object(sj, "Slot");
      reject_unknown(sj, {"curve", "side", "flag"}, "Slot");
      Slot s;
      s.curve = int_member(sj, "curve", "Slot");
      const Int side = int_member(sj, "side", "Slot");
      if (side < std::numeric_limits<int>::min() || side > std::numeric_limits<int>::max()) {
        malformed("slot side out of range", "side");
      }
      s.side = static_cast<int>(side);
      const Json& flag = member(sj, "flag", "Slot");
      if (flag == "ccw") {
        s.flag = Orientation::Ccw;
      } else if (flag == "cw") {
        s.flag = Orientation::Cw;
      } else {
        malformed("slot flag must be \"ccw\" or \"cw\"", "flag");
      }
      p.slots[k] = s;
    }
    g.pants.push_back(p);
  }
  return g;
}

Json to_json(const GlobalCoordinate& c) {
  return Json{{"n1", int_list(c.n1)}, {"n2", int_list(c.n2)}, {"t1", int_list(c.t1)},
              {"t2", int_list(c.t2)}, {"tP", int_list(c.tP)}, {"hP", int_list(c.hP)}};
}

template <>
GlobalCoordinate from_json<GlobalCoordinate>(const Json& j) {
  constexpr const char* type = "GlobalCoordinate";
  require_object(j, type);
  reject_unknown(j, {"n1", "n2", "t1", "t2", "tP", "hP"}, type);
  return {int_array(j, "n1", type), int_array(j, "n2", type), int_array(j, "t1", type),
          int_array(j, "t2", type), int_array(j, "tP", type), int_array(j, "hP", type)};
}

Json to_json(const SurfaceWebDescriptor& w) {
  Json annuli = Json::array();
  for (const auto& a : w.annuli) annuli.push_back(to_json(a));
  Json shear = Json::array();
  for (const auto& x : w.pants_shear) shear.push_back(to_json(x));
  return Json{{"graph", to_json(w.graph)}, {"annuli", std::move(annuli)},
              {"pants_shear", std::move(shear)}};
}

template <>
SurfaceWebDescriptor from_json<SurfaceWebDescriptor>(const Json& j) {
  constexpr const char* type = "SurfaceWebDescriptor";
  require_object(j, type);
  reject_unknown(j, {"graph", "annuli", "pants_shear"}, type);
  SurfaceWebDescriptor w;
  w.graph = from_json<DecompositionGraph>(member(j, "graph", type));
  const Json& annuli = member(j, "annuli", type);
  const Json& shear = member(j, "pants_shear", type);
  if (!annuli.is_array()) malformed("annuli must be an array", "annuli");
  if (!shear.is_array()) malformed("pants_shear must be an array", "pants_shear");
  for (const Json& a : annuli) w.annuli.push_back(from_json<AnnulusDescriptor>(a));
  for (const Json& x : shear) w.pants_shear.push_back(from_json<ShearVector>(x));
  return w;
}

Json to_json(const TorusCoordinate& c) {
  return Json{{"n1", c.n1}, {"n2", c.n2}, {"t1", c.t1}, {"t2", c.t2}};
}

template <>
TorusCoordinate from_json<TorusCoordinate>(const Json& j) {
  const TwistTuple t = from_json<TwistTuple>(j);
  return {t.n1, t.n2, t.t1, t.t2};
}

Json to_json(const BoxSpec& b) {
  Json j = Json::object();
  if (b.shear_bound) j["shear_bound"] = *b.shear_bound;
  if (b.n_bound) j["n_bound"] = *b.n_bound;
  if (b.t_bound) j["t_bound"] = *b.t_bound;
  if (b.h_bound) j["h_bound"] = *b.h_bound;
  return j;
}

Json to_json(const OracleReport& r, bool include_timing) {
  Json failures = Json::array();
  for (const Failure& f : r.failures) {
    failures.push_back(Json{{"check", f.check}, {"point", int_list(f.point)}});
  }
  Json counts = Json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  Json j{{"oracle", r.name},
         {"box", to_json(r.box)},
         {"checked", r.checked},
         {"counts", std::move(counts)},
         {"failure_count", r.failure_count},
         {"failures", std::move(failures)}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const Error& e) {
  // Membership failures that name a coordinate report just the field;
  // everything else carries the human-readable detail.
  Json j{{"error", std::string(to_string(e.kind()))}};
  if (!e.field().empty()) j["field"] = e.field();
  if (e.field().empty() || e.kind() == ErrorKind::Malformed) j["detail"] = e.detail();
  return j;
}

}  // namespace sl3web

#include "polyhit/io.hpp"

#include <fstream>
#include <sstream>

namespace polyhit {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string("field \"") + name + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<RatMatrix> matrices_from_json(const Json& j, std::size_t count, std::size_t rows, std::size_t cols,
                                          const char* name) {
  if (!j.is_array() || j.size() != count)
    throw InputError(std::string("field \"") + name + "\" must list " + std::to_string(count) + " matrices");
  std::vector<RatMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, rows, cols));
  return out;
}

std::vector<RatVector> vectors_from_json(const Json& j, std::size_t count, std::size_t len, const char* name) {
  if (!j.is_array() || j.size() != count)
    throw InputError(std::string("field \"") + name + "\" must list " + std::to_string(count) + " vectors");
  std::vector<RatVector> out;
  for (const auto& v : j) {
    out.push_back(vector_from_json(v));
    if (out.back().size() != len) throw InputError(std::string("field \"") + name + "\": vector of wrong length");
  }
  return out;
}

RatVector sized_vector(const Json& j, std::size_t len, const char* name) {
  RatVector v = vector_from_json(j);
  if (v.size() != len) throw InputError(std::string("field \"") + name + "\" must have length " + std::to_string(len));
  return v;
}

ParameterDomain domain_from_json(const Json& j, std::size_t p) {
  if (!j.is_object()) throw InputError("domain must be an object");
  if (j.contains("interval")) {
    const Json& iv = j["interval"];
    if (!iv.is_array() || iv.size() != 2) throw InputError("interval domain must be [alpha, beta]");
    if (p != 1) throw InputError("interval domain requires p = 1");
    return ParameterDomain::interval(rat_from_json(iv[0]), rat_from_json(iv[1]));
  }
  if (j.contains("vertices")) {
    std::vector<RatVector> vs;
    for (const auto& v : j["vertices"]) vs.push_back(vector_from_json(v));
    ParameterDomain d = ParameterDomain::vertices(std::move(vs));
    if (d.dim() != p) throw InputError("vertex domain dimension differs from p");
    return d;
  }
  if (j.contains("unrestricted")) return ParameterDomain::unrestricted(p);
  throw InputError("domain must be {\"interval\": ...}, {\"vertices\": ...} or {\"unrestricted\": true}");
}

Json domain_to_json(const ParameterDomain& d) {
  if (d.is_interval()) return {{"interval", {rat_to_json(d.as_interval().alpha), rat_to_json(d.as_interval().beta)}}};
  if (d.is_vertices()) {
    Json vs = Json::array();
    for (const auto& v : d.as_vertices().vertices) vs.push_back(vector_to_json(v));
    return {{"vertices", vs}};
  }
  return {{"unrestricted", true}};
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  throw InputError("rational must be a string \"num/den\" or an integer, got " + j.dump());
}

Json rat_to_json(const Rat& q) { return to_string(q); }

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat_to_json(q));
  return out;
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw InputError("matrix must have " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    RatVector row = vector_from_json(j[r]);
    if (row.size() != cols) throw InputError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json real_to_json(const RealValue& v) {
  if (const Rat* q = std::get_if<Rat>(&v)) return rat_to_json(*q);
  const auto& r = std::get<RealAlgebraic>(v);
  if (r.is_rational()) return rat_to_json(r.rational_value());
  Json poly = Json::array();
  for (const auto& c : r.poly().coeffs()) {
    if (c.fits_slong_p())
      poly.push_back(c.get_si());
    else
      poly.push_back(c.get_str());
  }
  return {{"poly", poly}, {"interval", {rat_to_json(r.lo()), rat_to_json(r.hi())}}, {"approx", r.approx()}};
}

std::string approx_string(const RealValue& v) {
  if (const Rat* q = std::get_if<Rat>(&v)) return to_decimal(*q);
  return std::get<RealAlgebraic>(v).approx();
}

Json approx_vector(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_decimal(q));
  return out;
}

Json interval_to_json(const RatInterval& iv) {
  if (iv.is_empty()) return nullptr;
  return {rat_to_json(iv.lo()), rat_to_json(iv.hi())};
}

Json sigma_to_json(const SigmaResult& s) {
  if (s.is_exact()) return real_to_json(s.exact());
  return {{"lo", rat_to_json(s.lo)}, {"hi", rat_to_json(s.hi)}, {"eps", rat_to_json(s.eps)}};
}

AffineFamily family_from_json(const Json& j) {
  const std::size_t d = count_field(j, "d"), p = count_field(j, "p"), m = count_field(j, "m");
  if (p == 0) throw InputError("p must be at least 1");
  AffineMatrixMap a{matrix_from_json(field(j, "A0"), m, d), matrices_from_json(field(j, "A"), p, m, d, "A")};
  AffineVectorMap b{sized_vector(field(j, "b0"), m, "b0"), vectors_from_json(field(j, "b"), p, m, "b")};
  return AffineFamily(std::move(a), std::move(b), domain_from_json(field(j, "domain"), p));
}

Json family_to_json(const AffineFamily& f) {
  Json a = Json::array(), b = Json::array();
  for (const auto& s : f.a().slopes) a.push_back(matrix_to_json(s));
  for (const auto& s : f.b().slopes) b.push_back(vector_to_json(s));
  return {{"d", f.d()},
          {"p", f.p()},
          {"m", f.m()},
          {"A0", matrix_to_json(f.a().base)},
          {"A", a},
          {"b0", vector_to_json(f.b().base)},
          {"b", b},
          {"domain", domain_to_json(f.domain())}};
}

AdaptInstance adapt_from_json(const Json& j) {
  const std::size_t d = count_field(j, "d"), p = count_field(j, "p"), m = count_field(j, "m");
  if (p == 0) throw InputError("p must be at least 1");
  AdaptInstance inst;
  inst.a_s = AffineMatrixMap{matrix_from_json(field(j, "A0"), m, d), matrices_from_json(field(j, "A"), p, m, d, "A")};
  inst.b = AffineVectorMap{sized_vector(field(j, "b0"), m, "b0"), vectors_from_json(field(j, "b"), p, m, "b")};
  const Json& cs1 = field(j, "c_s1");
  std::vector<RatVector> slopes;
  if (p == 1 && cs1.is_array() && (cs1.empty() || !cs1[0].is_array()))
    slopes.push_back(sized_vector(cs1, d, "c_s1"));
  else
    slopes = vectors_from_json(cs1, p, d, "c_s1");
  inst.c_s = AffineVectorMap{sized_vector(field(j, "c_s0"), d, "c_s0"), std::move(slopes)};
  inst.omega = domain_from_json(field(j, "domain"), p);
  if (j.contains("box")) {
    for (const auto& pair : j["box"]) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("box entries must be [lo, hi]");
      inst.box.emplace_back(rat_from_json(pair[0]), rat_from_json(pair[1]));
    }
  }
  if (j.contains("ell") && j["ell"].get<std::size_t>() > 0) {
    FirstStage fs;
    fs.ell = count_field(j, "ell");
    fs.a_f = AffineMatrixMap{matrix_from_json(field(j, "A_f0"), m, fs.ell),
                             matrices_from_json(field(j, "A_f"), p, m, fs.ell, "A_f")};
    fs.c_f = sized_vector(field(j, "c_f"), fs.ell, "c_f");
    inst.first = std::move(fs);
  }
  inst.validate();
  return inst;
}

Json adapt_to_json(const AdaptInstance& inst) {
  Json a = Json::array(), b = Json::array(), cs1 = Json::array();
  for (const auto& s : inst.a_s.slopes) a.push_back(matrix_to_json(s));
  for (const auto& s : inst.b.slopes) b.push_back(vector_to_json(s));
  if (inst.p() == 1)
    cs1 = vector_to_json(inst.c_s.slopes[0]);
  else
    for (const auto& s : inst.c_s.slopes) cs1.push_back(vector_to_json(s));
  Json out = {{"d", inst.d_s()},
              {"p", inst.p()},
              {"m", inst.m()},
              {"A0", matrix_to_json(inst.a_s.base)},
              {"A", a},
              {"b0", vector_to_json(inst.b.base)},
              {"b", b},
              {"c_s0", vector_to_json(inst.c_s.base)},
              {"c_s1", cs1},
              {"domain", domain_to_json(inst.omega)}};
  if (!inst.box.empty()) {
    Json box = Json::array();
    for (const auto& [lo, hi] : inst.box) box.push_back({rat_to_json(lo), rat_to_json(hi)});
    out["box"] = box;
  }
  if (inst.first) {
    Json af = Json::array();
    for (const auto& s : inst.first->a_f.slopes) af.push_back(matrix_to_json(s));
    out["ell"] = inst.first->ell;
    out["A_f0"] = matrix_to_json(inst.first->a_f.base);
    out["A_f"] = af;
    out["c_f"] = vector_to_json(inst.first->c_f);
  }
  return out;
}

Json lift_to_json(const LiftOutput& lift) {
  Json verts = Json::array();
  for (const auto& v : lift.p_hat_vertices)
    verts.push_back({{"omega", vector_to_json(v.omega)},
                     {"linear", matrix_to_json(v.linear)},
                     {"offset", vector_to_json(v.offset)}});
  Json surface = Json::array();
  for (const auto& s : lift.surface) surface.push_back({{"product", s.product}, {"left", s.left}, {"right", s.right}});
  return {{"dim", lift.dim},
          {"ell", lift.ell},
          {"p", lift.p},
          {"q_hat", family_to_json(lift.q_hat)},
          {"p_hat", {{"vertex_images", verts}, {"surface", surface}}}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace polyhit

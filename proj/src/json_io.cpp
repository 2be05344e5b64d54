#include "orthomod/json_io.hpp"

#include <sstream>

namespace omod {
namespace {

template <class T, class Str>
Json matrix_json_impl(const Mat<T>& M, Str str) {
  Json rows = Json::array();
  for (int i = 0; i < M.r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.c; ++j) row.push_back(str(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string entry_name(int i, int j) {
  std::ostringstream os;
  os << "entry (" << i << "," << j << ")";
  return os.str();
}

template <class T, class Parse>
Mat<T> matrix_from_json_impl(const Json& j, Parse parse) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::Parse, "matrix: expected a non-empty array of rows");
  int r = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw Error(ErrorCode::Parse, "matrix row 0: expected a non-empty array");
  int c = static_cast<int>(j[0].size());
  Mat<T> M(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c)
      throw Error(ErrorCode::Parse, "matrix row " + std::to_string(i) + ": ragged row");
    for (int k = 0; k < c; ++k) {
      const Json& e = j[i][k];
      try {
        if (e.is_number_integer())
          M.at(i, k) = T(Rat(static_cast<long>(e.get<long long>())));
        else if (e.is_string())
          M.at(i, k) = parse(e.get<std::string>());
        else
          throw Error(ErrorCode::Parse, "expected string or integer");
      } catch (const Error& err) {
        throw Error(ErrorCode::Parse, entry_name(i, k) + ": " + err.what());
      }
    }
  }
  return M;
}

}  // namespace

Json matrix_json(const MatI& M) {
  return matrix_json_impl(M, [](const Int& x) { return x.get_str(); });
}
Json matrix_json(const MatQ& M) {
  return matrix_json_impl(M, [](const Rat& x) { return to_string(x); });
}
Json matrix_json(const Mat<QuadInt>& M) {
  return matrix_json_impl(M, [](const QuadInt& x) { return to_string(x); });
}
Json matrix_json(const Mat<Quaternion>& M) {
  return matrix_json_impl(M, [](const Quaternion& x) { return to_string(x); });
}

Json group_elem_json(const GroupElem& g) {
  Json j;
  j["kind"] = kind_name(g.kind);
  j["m"] = g.m;
  j["halfTurn"] = g.halfTurn;
  if (g.kind == GroupKind::Siegel)
    j["matrix"] = matrix_json(g.rat());
  else if (g.kind == GroupKind::Hermitian)
    j["matrix"] = matrix_json(g.quad());
  else
    j["matrix"] = matrix_json(g.quat());
  return j;
}

MatQ rat_matrix_from_json(const Json& j) {
  return matrix_from_json_impl<Rat>(j, [](const std::string& s) { return parse_rat(s); });
}
Mat<QuadInt> quad_matrix_from_json(const Json& j, long m) {
  return matrix_from_json_impl<QuadInt>(j, [m](const std::string& s) { return parse_quad(s, m); });
}
Mat<Quaternion> quat_matrix_from_json(const Json& j) {
  return matrix_from_json_impl<Quaternion>(j, [](const std::string& s) { return parse_quat(s); });
}

GroupElem group_elem_from_json(const Json& j, const std::string& fallback_kind, long fallback_m) {
  std::string kind_str = fallback_kind;
  long m = fallback_m;
  int half_turn = 0;
  const Json* matrix = &j;
  if (j.is_object()) {
    if (j.contains("kind")) {
      if (!j["kind"].is_string()) throw Error(ErrorCode::Parse, "\"kind\": expected a string");
      kind_str = j["kind"].get<std::string>();
    }
    if (j.contains("m")) {
      if (!j["m"].is_number_integer()) throw Error(ErrorCode::Parse, "\"m\": expected an integer");
      m = j["m"].get<long>();
    }
    if (j.contains("halfTurn")) {
      if (!j["halfTurn"].is_number_integer())
        throw Error(ErrorCode::Parse, "\"halfTurn\": expected 0 or 1");
      half_turn = j["halfTurn"].get<int>();
      if (half_turn != 0 && half_turn != 1)
        throw Error(ErrorCode::Parse, "\"halfTurn\": expected 0 or 1");
    }
    if (!j.contains("matrix")) throw Error(ErrorCode::Parse, "missing \"matrix\"");
    matrix = &j["matrix"];
  }
  if (kind_str.empty()) throw Error(ErrorCode::Parse, "missing \"kind\" and no --kind given");
  GroupKind kind = kind_from_name(kind_str);
  if (half_turn != 0 && kind != GroupKind::QuatExtended)
    throw Error(ErrorCode::Parse, "\"halfTurn\" requires kind quat-extended");
  switch (kind) {
    case GroupKind::Siegel:
      return make_siegel(rat_matrix_from_json(*matrix));
    case GroupKind::Hermitian:
      if (m <= 0) throw Error(ErrorCode::Parse, "hermitian kind needs a positive \"m\"");
      return make_hermitian(m, quad_matrix_from_json(*matrix, m));
    default:
      return make_quat(kind, quat_matrix_from_json(*matrix), half_turn);
  }
}

Json orth_image_json(const OrthImage& im) {
  auto vec = [](const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
  };
  Json j;
  j["kind"] = kind_name(im.kind);
  j["m"] = im.m;
  j["dim"] = im.dim();
  j["matrix"] = matrix_json(im.U);
  Json blocks;
  blocks["alpha"] = to_string(im.alpha());
  blocks["a"] = vec(im.a_vec());
  blocks["beta"] = to_string(im.beta());
  blocks["b"] = vec(im.b_col());
  blocks["K"] = matrix_json(im.K());
  blocks["c"] = vec(im.c_col());
  blocks["gamma"] = to_string(im.gamma());
  blocks["d"] = vec(im.d_vec());
  blocks["delta"] = to_string(im.delta());
  j["blocks"] = std::move(blocks);
  return j;
}

Json verify_report_json(const VerifyReport& r) {
  Json j;
  j["subgroup"] = r.subgroup;
  j["seed"] = r.seed;
  j["forward"] = {{"total", r.forward_total}, {"pass", r.forward_pass}, {"fail", r.forward_fail}};
  j["backward"] = {{"total", r.backward_total},
                   {"hits", r.backward_hits},
                   {"pass", r.backward_pass},
                   {"fail", r.backward_fail}};
  j["ok"] = r.ok();
  j["failures"] = r.failures;
  return j;
}

Json lattice_image_json(const LatticeImage& li) {
  Json j;
  j["hnf"] = matrix_json(li.hnf);
  Json inv = Json::array();
  for (const Int& d : li.invariants) inv.push_back(d.get_str());
  j["invariants"] = std::move(inv);
  j["diagonal"] = li.diagonal;
  if (li.diagonal) {
    Json d = Json::array();
    for (const Int& x : li.diag) d.push_back(x.get_str());
    j["diag"] = std::move(d);
  }
  j["image"] = image_group_string(li);
  return j;
}

std::string image_group_string(const LatticeImage& li) {
  const std::vector<Int>& ds = li.diagonal ? li.diag : li.invariants;
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += " x ";
    out += (ds[i] == 1) ? "Z" : ds[i].get_str() + "Z";
  }
  return out.empty() ? "0" : out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace omod

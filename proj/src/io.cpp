#include "plie/io.hpp"

#include <fstream>
#include <stdexcept>

namespace plie::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::runtime_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_unsigned())
    throw std::runtime_error(std::string("field \"") + name + "\" must be a non-negative integer");
  return f.get<std::size_t>();
}

Mat mat_field(const json& j, const char* name, std::size_t rows, std::size_t cols) {
  Mat m = mat_from_json(field(j, name));
  if (m.rows() != rows || (rows > 0 && m.cols() != cols))
    throw std::runtime_error(std::string("field \"") + name + "\" must be " +
                             std::to_string(rows) + " x " + std::to_string(cols));
  return m;
}

json basis_to_json(const std::vector<Vec>& basis) {
  json arr = json::array();
  for (const Vec& v : basis) arr.push_back(to_json(v));
  return arr;
}

std::vector<Vec> basis_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of vectors");
  std::vector<Vec> out;
  for (const json& row : j) out.push_back(vec_from_json(row));
  return out;
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Vec& v) {
  json arr = json::array();
  for (const Scalar& s : v) arr.push_back(s.str());
  return arr;
}

json to_json(const Mat& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
  return arr;
}

json to_json(const CartanPentad& p) {
  return json{{"r", p.r}, {"n", p.n}, {"A", to_json(p.a)}, {"D", to_json(p.d)},
              {"gamma", to_json(p.gamma)}};
}

json to_json(const ReductiveData& d) {
  return json{{"dim_center", d.dim_center},
              {"dim_cartan", d.dim_cartan},
              {"gram", to_json(d.gram)},
              {"columns", to_json(d.columns)}};
}

json to_json(const SpanAnalysis& a) {
  return json{{"rank_D", a.rank_d},
              {"rank_C", a.rank_c},
              {"dim_bracket", a.dim_bracket},
              {"dim_ann", a.dim_ann},
              {"dim_intersection", a.dim_intersection},
              {"h_rows", to_json(a.h_rows)},
              {"ann_basis", basis_to_json(a.ann_basis)},
              {"intersection_basis", basis_to_json(a.intersection_basis)}};
}

json to_json(const StructureReport& r) {
  return json{{"cartan", to_json(r.cartan)},
              {"rank_D", r.rank_d},
              {"rank_C", r.rank_c},
              {"basis_reduced", basis_to_json(r.basis_reduced)},
              {"basis_central", basis_to_json(r.basis_central)},
              {"basis_diagonal", basis_to_json(r.basis_diagonal)},
              {"center_coeffs", basis_to_json(r.center_coeffs)},
              {"cartan_invertible", r.cartan_invertible},
              {"is_reduced_contragredient", r.is_reduced_contragredient}};
}

json to_json(const Report& r) {
  return json{{"name", r.name}, {"pass", r.pass}, {"witness", r.witness}, {"seconds", r.seconds}};
}

json to_json(const DimsTable& t) {
  json degrees = json::array();
  json dims = json::array();
  for (int d = -t.max_degree; d <= t.max_degree; ++d) {
    degrees.push_back(d);
    dims.push_back(t.dims.at(static_cast<std::size_t>(d + t.max_degree)));
  }
  return json{{"degrees", degrees}, {"dims", dims}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_string()) throw std::runtime_error("scalar entries must be strings like \"p/q\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of scalar strings");
  Vec v;
  for (const json& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of rows");
  std::vector<Vec> rows;
  std::size_t cols = 0;
  for (const json& row : j) {
    rows.push_back(vec_from_json(row));
    if (rows.size() == 1)
      cols = rows.back().size();
    else if (rows.back().size() != cols)
      throw std::runtime_error("ragged matrix rows");
  }
  return Mat::from_rows(rows, cols);
}

CartanPentad pentad_from_json(const json& j) {
  CartanPentad p;
  p.r = count_field(j, "r");
  p.n = count_field(j, "n");
  p.a = mat_field(j, "A", p.r, p.r);
  p.d = mat_field(j, "D", p.r, p.n);
  const Vec gamma = vec_from_json(field(j, "gamma"));
  if (gamma.size() != p.n) throw std::runtime_error("field \"gamma\" must have n entries");
  p.gamma = gamma;
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return p;
}

Mat cartan_from_json(const json& j) {
  const Mat c = mat_from_json(field(j, "C"));
  if (c.rows() != c.cols()) throw std::runtime_error("field \"C\" must be square");
  return c;
}

ReductiveData reductive_from_json(const json& j) {
  ReductiveData d;
  d.dim_center = count_field(j, "dim_center");
  d.dim_cartan = count_field(j, "dim_cartan");
  const std::size_t r = d.dim_center + d.dim_cartan;
  d.gram = mat_field(j, "gram", r, r);
  d.columns = mat_from_json(field(j, "columns"));
  if (d.columns.rows() != r)
    throw std::runtime_error("field \"columns\" must have dim_center + dim_cartan rows");
  return d;
}

SpanAnalysis span_from_json(const json& j) {
  SpanAnalysis a;
  a.rank_d = count_field(j, "rank_D");
  a.rank_c = count_field(j, "rank_C");
  a.dim_bracket = count_field(j, "dim_bracket");
  a.dim_ann = count_field(j, "dim_ann");
  a.dim_intersection = count_field(j, "dim_intersection");
  a.h_rows = mat_from_json(field(j, "h_rows"));
  a.ann_basis = basis_from_json(field(j, "ann_basis"));
  a.intersection_basis = basis_from_json(field(j, "intersection_basis"));
  return a;
}

StructureReport structure_from_json(const json& j) {
  StructureReport r;
  r.cartan = mat_from_json(field(j, "cartan"));
  r.rank_d = count_field(j, "rank_D");
  r.rank_c = count_field(j, "rank_C");
  r.basis_reduced = basis_from_json(field(j, "basis_reduced"));
  r.basis_central = basis_from_json(field(j, "basis_central"));
  r.basis_diagonal = basis_from_json(field(j, "basis_diagonal"));
  r.center_coeffs = basis_from_json(field(j, "center_coeffs"));
  r.cartan_invertible = field(j, "cartan_invertible").get<bool>();
  r.is_reduced_contragredient = field(j, "is_reduced_contragredient").get<bool>();
  return r;
}

Report report_from_json(const json& j) {
  Report r;
  r.name = field(j, "name").get<std::string>();
  r.pass = field(j, "pass").get<bool>();
  r.witness = field(j, "witness").get<std::string>();
  r.seconds = field(j, "seconds").get<double>();
  return r;
}

DimsTable dims_from_json(const json& j) {
  const json& degrees = field(j, "degrees");
  const json& dims = field(j, "dims");
  if (!degrees.is_array() || !dims.is_array() || degrees.size() != dims.size() ||
      degrees.empty() || degrees.size() % 2 == 0)
    throw std::runtime_error("dims table must list degrees -N..N");
  DimsTable t;
  t.max_degree = static_cast<int>(degrees.size() / 2);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i].get<int>() != static_cast<int>(i) - t.max_degree)
      throw std::runtime_error("dims table degrees must run -N..N");
    t.dims.push_back(dims[i].get<std::size_t>());
  }
  return t;
}

json matrix_file_json(const Mat& cartan) { return json{{"C", to_json(cartan)}}; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace plie::io

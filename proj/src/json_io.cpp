#include "verlinde/json_io.hpp"

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

int prime_field(const Json& j) {
  const Json& p = field(j, "p");
  if (!p.is_number_integer()) throw InvalidArgument("JSON: \"p\" must be an integer");
  return p.get<int>();
}

std::uint64_t uint_value(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    throw InvalidArgument(std::string("JSON: ") + what + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> uint_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string("JSON: ") + what + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) out.push_back(uint_value(e, what));
  return out;
}

}  // namespace

Json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("JSON: not an integer string");
    }
  }
  throw InvalidArgument("JSON: expected an integer");
}

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(mpz_to_json(c));
  return Json{{"p", x.p()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  const int p = prime_field(j);
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw InvalidArgument("JSON: \"coeffs\" must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& e : c) coeffs.push_back(mpz_from_json(e));
  return CycNum(p, std::move(coeffs));
}

Json to_json(const VerObject& x) { return Json{{"p", x.p()}, {"mult", x.mult()}}; }

VerObject ver_object_from_json(const Json& j) { return VerObject(prime_field(j), uint_array(field(j, "mult"), "\"mult\"")); }

Json to_json(const VerPair& x) { return Json{{"p", x.p()}, {"mult", x.as_rows()}}; }

VerPair ver_pair_from_json(const Json& j) {
  VerPair out(prime_field(j));
  const Json& rows = field(j, "mult");
  if (!rows.is_array() || rows.size() != out.size()) throw InvalidArgument("JSON: \"mult\" must have p-1 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = uint_array(rows[i], "\"mult\" row");
    if (row.size() != out.size()) throw InvalidArgument("JSON: \"mult\" rows must have p-1 entries");
    for (std::size_t k = 0; k < row.size(); ++k) out(static_cast<int>(i + 1), static_cast<int>(k + 1)) = row[k];
  }
  return out;
}

Json to_json(const EnhancedObject& x) {
  Json terms = Json::array();
  for (const auto& [key, m] : x.terms()) {
    const auto& [i, j, a] = key;
    terms.push_back(Json{{"i", i}, {"j", j}, {"character", a}, {"mult", m}});
  }
  return Json{{"p", x.p()}, {"terms", terms}};
}

EnhancedObject enhanced_from_json(const Json& j) {
  EnhancedObject out(prime_field(j));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidArgument("JSON: \"terms\" must be an array");
  for (const auto& t : terms) {
    out.add(field(t, "i").get<int>(), field(t, "j").get<int>(), field(t, "character").get<int>(),
            uint_value(field(t, "mult"), "\"mult\""));
  }
  return out;
}

Json to_json(const JordanType& t) { return Json{{"p", t.p()}, {"blocks", t.blocks()}}; }

JordanType jordan_type_from_json(const Json& j) { return JordanType(prime_field(j), uint_array(field(j, "blocks"), "\"blocks\"")); }

Json to_json(const CyclicRep& v) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < v.dim(); ++k) row.push_back(static_cast<int>(v.nilpotent()(i, k)));
    rows.push_back(row);
  }
  return Json{{"p", v.p()}, {"nilpotent", rows}};
}

CyclicRep cyclic_rep_from_json(const Json& j) {
  const int p = prime_field(j);
  require_small_prime(p);
  const Json& rows = field(j, "nilpotent");
  if (!rows.is_array()) throw InvalidArgument("JSON: \"nilpotent\" must be an array of rows");
  const std::size_t n = rows.size();
  gfp::Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = uint_array(rows[i], "\"nilpotent\" entry");
    if (row.size() != n) throw InvalidArgument("JSON: \"nilpotent\" must be square");
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k] >= static_cast<std::uint64_t>(p)) throw InvalidArgument("JSON: \"nilpotent\" entries must lie in 0..p-1");
      m(i, k) = static_cast<gfp::Element>(row[k]);
    }
  }
  return CyclicRep(std::move(m));
}

Json to_json(const McKayGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  return Json{{"p", g.p}, {"vertices", g.vertices}, {"edges", edges}};
}

McKayGraph mckay_from_json(const Json& j) {
  McKayGraph g{prime_field(j), {}, {}};
  for (const auto& v : field(j, "vertices")) g.vertices.push_back(v.get<int>());
  for (const auto& e : field(j, "edges"))
    g.edges.push_back({field(e, "from").get<int>(), field(e, "to").get<int>(), uint_value(field(e, "weight"), "\"weight\"")});
  return g;
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("JSON: a partition is an array of positive integers");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidArgument("JSON: partition parts must be integers");
    parts.push_back(e.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const std::vector<Partition>& chain) {
  Json out = Json::array();
  for (const auto& lambda : chain) out.push_back(to_json(lambda));
  return out;
}

std::vector<Partition> chain_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("JSON: a chain is an array of partitions");
  std::vector<Partition> out;
  for (const auto& e : j) out.push_back(partition_from_json(e));
  return out;
}

Json to_json(const BoxPos& b) { return Json{{"row", b.row}, {"col", b.col}, {"residue", b.residue}}; }

Json to_json(const PadicDim& d) { return Json{{"p", d.p}, {"digits", d.digits}, {"value", mpz_to_json(d.value)}}; }

PadicDim padic_from_json(const Json& j) {
  PadicDim d{prime_field(j), {}, mpz_from_json(field(j, "value"))};
  for (const auto& e : field(j, "digits")) d.digits.push_back(e.get<int>());
  return d;
}

Json to_json(const JordanContent& c) { return Json{{"p", c.p}, {"m", c.m}}; }

JordanContent content_from_json(const Json& j) { return {prime_field(j), uint_array(field(j, "m"), "\"m\"")}; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace verlinde

#include "resalg/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace resalg {

namespace {

using nlohmann::json;

Table table_from_json(const json& j, int n, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(field) + ": expected " + std::to_string(n) +
                     " rows");
  Table t(n);
  for (int x = 0; x < n; ++x) {
    const json& row = j[x];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string(field) + ": row " + std::to_string(x) +
                       " has wrong length");
    for (int y = 0; y < n; ++y) {
      if (!row[y].is_number_integer())
        throw ParseError(std::string(field) + ": non-integer entry");
      const int v = row[y].get<int>();
      if (v < 0 || v >= n)
        throw ParseError(std::string(field) + ": entry out of range at (" +
                         std::to_string(x) + "," + std::to_string(y) + ")");
      t.at(x, y) = v;
    }
  }
  return t;
}

FiniteAlgebra relabel_for_io(const FiniteAlgebra& a,
                             const std::vector<Elem>& perm) {
  FiniteAlgebra r;
  r.size = a.size;
  r.signature = a.signature;
  r.name = a.name;
  r.top = perm[a.top];
  if (a.has_bot()) r.bot = perm[a.bot];
  std::vector<Elem> inv(a.size);
  for (Elem x = 0; x < a.size; ++x) inv[perm[x]] = x;
  auto build = [&](const Table& t) {
    Table rt(a.size);
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y)
        rt.at(x, y) = perm[t(inv[x], inv[y])];
    return rt;
  };
  r.meet = build(a.meet);
  if (a.has_join()) r.join = build(a.join);
  r.prod = build(a.prod);
  r.imp = build(a.imp);
  return r;
}

}  // namespace

std::string to_document(const FiniteAlgebra& a) {
  // Hand-rolled layout: one table row per line keeps documents diffable.
  std::ostringstream os;
  auto table = [&](const char* field, const Table& t) {
    os << "  \"" << field << "\": [";
    for (Elem x = 0; x < t.size(); ++x) {
      os << (x ? ",\n    [" : "\n    [");
      for (Elem y = 0; y < t.size(); ++y) os << (y ? "," : "") << t(x, y);
      os << ']';
    }
    os << "\n  ]";
  };
  os << "{\n";
  os << "  \"name\": " << json(a.name).dump() << ",\n";
  os << "  \"signature\": \"" << to_string(a.signature) << "\",\n";
  os << "  \"size\": " << a.size << ",\n";
  if (a.has_bot()) os << "  \"bot\": " << a.bot << ",\n";
  os << "  \"top\": " << a.top << ",\n";
  if (a.signature == Signature::ResiduatedLattice) {
    table("meet", a.meet);
    os << ",\n";
    table("join", a.join);
    os << ",\n";
  }
  table("prod", a.prod);
  os << ",\n";
  table("imp", a.imp);
  os << "\n}\n";
  return os.str();
}

LoadResult algebra_from_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  if (!doc.contains("signature") || !doc["signature"].is_string())
    throw ParseError("missing signature");
  const auto sig = signature_from_string(doc["signature"].get<std::string>());
  if (!sig)
    throw ParseError("unknown signature " +
                     doc["signature"].get<std::string>());
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    throw ParseError("missing size");
  const int n = doc["size"].get<int>();
  if (n < 1 || n > 64) throw ParseError("size out of range");

  FiniteAlgebra a;
  a.size = n;
  a.signature = *sig;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name must be a string");
    a.name = doc["name"].get<std::string>();
  }

  auto need_index = [&](const char* field) {
    if (!doc.contains(field) || !doc[field].is_number_integer())
      throw ParseError(std::string("missing ") + field);
    const int v = doc[field].get<int>();
    if (v < 0 || v >= n)
      throw ParseError(std::string(field) + " out of range");
    return v;
  };
  a.top = need_index("top");
  if (a.has_bot())
    a.bot = need_index("bot");
  else
    a.bot = -1;

  auto need_table = [&](const char* field) {
    if (!doc.contains(field))
      throw ParseError(std::string("missing ") + field + " table");
    return table_from_json(doc[field], n, field);
  };
  a.prod = need_table("prod");
  a.imp = need_table("imp");
  if (a.signature == Signature::ResiduatedLattice) {
    a.meet = need_table("meet");
    a.join = need_table("join");
  } else {
    refresh_hoop_meet(a);
  }

  LoadResult out;
  const bool bot_ok = !a.has_bot() || a.bot == 0;
  if (!bot_ok || a.top != n - 1) {
    std::vector<Elem> perm(n, -1);
    std::vector<char> taken(n, 0);
    perm[a.top] = n - 1;
    taken[n - 1] = 1;
    if (a.has_bot() && a.bot != a.top) {
      perm[a.bot] = 0;
      taken[0] = 1;
    }
    Elem next = 0;
    for (Elem x = 0; x < n; ++x) {
      if (perm[x] >= 0) continue;
      while (taken[next]) ++next;
      perm[x] = next;
      taken[next] = 1;
    }
    a = relabel_for_io(a, perm);
    out.relabeled = true;
    out.notice = "noncanonical element order: relabeled so bot=0, top=" +
                 std::to_string(n - 1);
  }

  const ValidationReport report = validate_axioms(a);
  if (!report.valid())
    throw ValidationError("algebra fails validation:\n" + report.summary(),
                          report);
  out.algebra = std::move(a);
  return out;
}

LoadResult load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_document(buf.str());
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_document(a);
}

}  // namespace resalg

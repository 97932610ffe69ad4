#include "posetpoly/io.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "posetpoly/errors.hpp"

namespace posetpoly {

using Json = nlohmann::ordered_json;

namespace {

Json poset_json(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [i, j] : p.covers()) covers.emplace_back(p.label(i), p.label(j));
  std::sort(covers.begin(), covers.end());
  Json c = Json::array();
  for (const auto& [lo, hi] : covers) c.push_back({lo, hi});
  Json out;
  out["labels"] = p.labels();
  out["covers"] = std::move(c);
  return out;
}

Json coeffs(const FPoly& f) { return Json(f.coeffs()); }

// Face counts through the top dimension; trailing zeros never occur for a
// full-dimensional polytope but pad anyway so both vectors line up.
std::vector<FPoly::Coeff> padded(const FPoly& f, std::size_t len) {
  std::vector<FPoly::Coeff> v = f.coeffs();
  v.resize(std::max(len, v.size()), 0);
  return v;
}

FPoly::Coeff facets_of(const FPoly& f, int n) { return n == 0 ? 0 : f[static_cast<std::size_t>(n)]; }

Json count_or_null(auto&& fn) {
  try {
    return Json(fn());
  } catch (const OverflowError&) {
    return Json(nullptr);
  }
}

Json tree_json(const DecompositionTree& t, const Poset& root) {
  Json out;
  out["kind"] = kind_name(t.kind);
  out["size"] = t.size();
  if (t.kind == DecompositionTree::Kind::Leaf) {
    out["x_free"] = is_x_free(t.poset);
    Json labels = Json::array();
    for (int i : elements_of(t.elements)) labels.push_back(root.label(i));
    out["labels"] = std::move(labels);
  } else {
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(tree_json(c, root));
    out["children"] = std::move(kids);
  }
  return out;
}

std::string csv_rows(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << "\n";
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_json(const Poset& p) { return poset_json(p).dump(); }

Poset poset_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw ParseError("poset JSON needs a \"labels\" array", 1, 1);
  }
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings", 1, 1);
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw ParseError("\"covers\" must be an array", 1, 1);
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw ParseError("each cover must be a pair of labels", 1, 1);
      }
      rel.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return Poset::from_covers(std::move(labels), rel);
}

bool looks_like_poset_json(std::string_view text) {
  const Json j = Json::parse(text, nullptr, false);
  return !j.is_discarded() && j.is_object() && j.contains("labels");
}

std::uint64_t poset_hash(const Poset& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : poset_to_json(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string describe_report(const Poset& p, Format format) {
  Json out;
  out["poset"] = poset_json(p);
  out["elements"] = p.size();
  out["covers"] = p.covers().size();
  out["filters"] = count_or_null([&] { return count_antichains(p); });
  out["antichains"] = count_or_null([&] { return count_antichains(p); });
  out["maximal_chains"] = count_or_null([&] { return count_maximal_chains(p); });
  out["minimal"] = popcount(p.minimal_elements());
  out["maximal"] = popcount(p.maximal_elements());
  const auto witness = find_x_subposet(p);
  out["x_free"] = !witness.has_value();
  if (witness) {
    Json w = Json::array();
    for (int i : *witness) w.push_back(p.label(i));
    out["x_witness"] = std::move(w);
  } else {
    out["x_witness"] = nullptr;
  }
  out["facets"] = {{"order", count_or_null([&] { return facet_count_order(p); })},
                   {"chain", count_or_null([&] { return facet_count_chain(p); })}};
  const auto tree = in_family(p);
  out["in_family"] = tree.has_value();
  if (format == Format::Json) return out.dump() + "\n";

  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, value] : out.items()) {
    if (key == "facets") {
      rows.push_back({"facets_order", value["order"].dump()});
      rows.push_back({"facets_chain", value["chain"].dump()});
    } else {
      rows.push_back({key, csv_field(value.dump())});
    }
  }
  return csv_rows({"key", "value"}, rows);
}

std::string fvector_report(const Poset& p, PolytopeKind kind, Method method, const FPoly& f,
                           Format format) {
  if (format == Format::Csv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      rows.push_back({std::to_string(k), std::to_string(static_cast<int>(k) - 1),
                      std::to_string(f[k])});
    }
    return csv_rows({"degree", "dim", "count"}, rows);
  }
  Json out;
  out["poset"] = poset_json(p);
  out["kind"] = kind_name(kind);
  out["method"] = method_name(method);
  out["f"] = coeffs(f);
  out["dim"] = p.size();
  out["vertices"] = f[1];
  out["facets"] = facets_of(f, p.size());
  return out.dump() + "\n";
}

std::string compare_report(const TheoremReport& r, Format format) {
  const std::size_t len = std::max(r.f_order.coeffs().size(), r.f_chain.coeffs().size());
  const auto fo = padded(r.f_order, len);
  const auto fc = padded(r.f_chain, len);
  if (format == Format::Csv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < len; ++k) {
      rows.push_back({std::to_string(k), std::to_string(static_cast<int>(k) - 1),
                      std::to_string(fo[k]), std::to_string(fc[k]),
                      std::to_string(r.slack[k])});
    }
    return csv_rows({"degree", "dim", "fO", "fC", "slack"}, rows);
  }
  const int n = r.poset.size();
  Json out;
  out["poset"] = poset_json(r.poset);
  out["fO"] = fo;
  out["fC"] = fc;
  out["leq"] = r.leq;
  out["slack"] = r.slack;
  out["method"] = method_name(r.method);
  out["x_free"] = r.x_free;
  out["equal"] = r.f_order == r.f_chain;
  out["vertices"] = {{"order", r.f_order[1]}, {"chain", r.f_chain[1]}};
  out["facets"] = {{"order", facets_of(r.f_order, n)}, {"chain", facets_of(r.f_chain, n)}};
  Json steps = Json::array();
  for (const OrdinalStep& s : r.steps) {
    steps.push_back({{"size_a", s.size_a},
                     {"size_b", s.size_b},
                     {"ineq2", s.ineq2},
                     {"ineq3", s.ineq3}});
  }
  out["steps"] = std::move(steps);
  return out.dump() + "\n";
}

std::string decompose_report(const Poset& p) {
  Json out;
  out["poset"] = poset_json(p);
  const auto tree = in_family(p);
  out["in_family"] = tree.has_value();
  if (tree) {
    out["tree"] = tree_json(*tree, p);
    out["text"] = describe(*tree);
  } else {
    out["tree"] = nullptr;
    out["text"] = "NotInFamily";
  }
  return out.dump() + "\n";
}

std::string export_polytope(const Poset& p, PolytopeKind kind, ExportWhat what) {
  const PosetPolytope poly = make_polytope(p, kind);
  if (what == ExportWhat::Faces) return faces_jsonl(polytope_faces(poly));
  Json out;
  out["kind"] = kind_name(kind);
  out["ambient_dim"] = p.size();
  if (what == ExportWhat::VRep) {
    out["vertices"] = poly.vrep.vertices;
  } else {
    Json rows = Json::array();
    for (const Inequality& row : poly.hrep.rows) {
      Json r = row.a;
      r.push_back(row.b);
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
  }
  return out.dump() + "\n";
}

}  // namespace posetpoly

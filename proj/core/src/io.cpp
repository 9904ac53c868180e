#include "convexiq/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace convexiq {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json points_json(const PointList& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(vec_json(p));
  return a;
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
    throw ParseError("not a real: \"" + s + "\"");
  }
  throw ParseError("expected a real, got " + std::string(j.type_name()));
}

Vec vec_from(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError("expected an array of " + std::to_string(n) + " reals");
  }
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = real_from(j[static_cast<std::size_t>(i)]);
  return v;
}

PointList points_from(const json& j, int n) {
  if (!j.is_array()) throw ParseError("expected an array of points");
  PointList out;
  for (const auto& p : j) out.push_back(vec_from(p, n));
  return out;
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; })) {
      throw ParseError("unexpected field \"" + k + "\"");
    }
  }
}

json body_json(const Body& body) {
  json j;
  j["schema"] = "body/1";
  j["kind"] = to_string(body.kind());
  j["n"] = body.ambient_dim();
  if (const auto* p = body.get_if<VPolytope>()) {
    j["vertices"] = points_json(p->vertices());
  } else if (const auto* z = body.get_if<Zonotope>()) {
    j["center"] = vec_json(z->center());
    j["generators"] = points_json(z->generators());
  } else if (const auto* b = body.get_if<Ball>()) {
    j["center"] = vec_json(b->center());
    j["radius"] = b->radius();
    if (!b->full_dimensional()) {
      PointList cols;
      for (Eigen::Index c = 0; c < b->span().cols(); ++c) cols.push_back(b->span().col(c));
      j["span"] = points_json(cols);
    }
  } else if (const auto* nm = body.get_if<Named>()) {
    j["id"] = to_string(nm->id());
    if (nm->id() == NamedId::K1) j["fineness"] = nm->fineness();
  }
  return j;
}

json report_json(const IneqReport& r) {
  json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["n"] = r.n;
  j["status"] = to_string(r.status);
  j["precondition_met"] = r.precondition_met;
  j["warnings"] = r.warnings;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["oriented_slack"] = r.oriented_slack;
  j["satisfied"] = r.satisfied;
  j["tolerance"] = r.tolerance;
  j["equality_flag"] = to_string(r.equality_flag);
  j["matched_family"] = r.matched_family;
  j["quadrature_error"] = r.quadrature_error ? json(*r.quadrature_error) : json(nullptr);
  j["exact"] = r.exact;
  j["fingerprint"] = r.fingerprint;
  j["proven_violation"] = r.proven_violation();
  json links = json::array();
  for (const auto& l : r.links) {
    links.push_back({{"label", l.label},
                     {"lhs", l.lhs},
                     {"rhs", l.rhs},
                     {"orientation", l.orientation == Orientation::Geq ? ">=" : "<="},
                     {"oriented_slack", l.oriented_slack},
                     {"tolerance", l.tolerance},
                     {"propagated_error", l.propagated_error},
                     {"satisfied", l.satisfied},
                     {"equality_flag", to_string(l.equality_flag)},
                     {"matched_family", l.matched_family}});
  }
  j["links"] = links;
  return j;
}

json config_json(const SearchConfig& c) {
  json j;
  j["schema"] = "search-config/1";
  j["problem"] = c.problem;
  j["n"] = c.n;
  j["m"] = c.m;
  j["family"] = c.family;
  j["family_size"] = c.family_size;
  j["iterations"] = c.iterations;
  j["restarts"] = c.restarts;
  j["scale"] = c.scale;
  j["seed"] = c.seed;
  j["c"] = c.c ? json(*c.c) : json(nullptr);
  j["tolerance"] = c.tolerance;
  j["quad_resolution"] = c.quad_resolution;
  return j;
}

std::string fmt_real(double v) { return json(v).dump(); }

}  // namespace

std::string body_to_json(const Body& body) { return dump(body_json(body)); }

Body body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("body document must be an object");
    if (field(j, "schema") != "body/1") throw ParseError("unsupported schema, expected body/1");
    const auto& n_field = field(j, "n");
    if (!n_field.is_number_integer()) throw ParseError("\"n\" must be an integer");
    const int n = n_field.get<int>();
    check_dimension(n);
    const auto kind = field(j, "kind");
    if (kind == "vpolytope") {
      only_keys(j, {"schema", "kind", "n", "vertices"});
      auto pts = points_from(field(j, "vertices"), n);
      if (pts.empty()) return VPolytope::empty(n);
      return VPolytope::from_points(pts);
    }
    if (kind == "zonotope") {
      only_keys(j, {"schema", "kind", "n", "center", "generators"});
      return Zonotope(vec_from(field(j, "center"), n), points_from(field(j, "generators"), n));
    }
    if (kind == "ball") {
      only_keys(j, {"schema", "kind", "n", "center", "radius", "span"});
      const Vec c = vec_from(field(j, "center"), n);
      const double r = real_from(field(j, "radius"));
      if (!j.contains("span")) return Ball(c, r);
      const auto cols = points_from(j["span"], n);
      Mat s(n, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) s.col(static_cast<Eigen::Index>(k)) = cols[k];
      return Ball(c, r, s);
    }
    if (kind == "named") {
      only_keys(j, {"schema", "kind", "n", "id", "fineness"});
      const auto& id = field(j, "id");
      if (!id.is_string()) throw ParseError("\"id\" must be a string");
      int fineness = Named::kDefaultFineness;
      if (j.contains("fineness")) {
        if (!j["fineness"].is_number_integer()) throw ParseError("\"fineness\" must be an integer");
        fineness = j["fineness"].get<int>();
      }
      return Named(named_id_from_string(id.get<std::string>()), n, fineness);
    }
    throw ParseError("unknown body kind " + kind.dump());
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad body document: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid body: ") + e.what());
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string body_fingerprint(const Body& body) { return fnv1a_hex(body_json(body).dump()); }

std::string reports_to_json(const std::vector<IneqReport>& reports) {
  json j;
  j["schema"] = "report/1";
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  return dump(j);
}

std::string reports_to_csv(const std::vector<std::pair<std::string, IneqReport>>& rows) {
  std::ostringstream os;
  os << "body,id,params,status,lhs,rhs,oriented_slack,tolerance,satisfied,equality_flag,exact,precondition_met\n";
  for (const auto& [label, r] : rows) {
    os << label << ',' << r.id << ",\"" << r.params << "\"," << to_string(r.status) << ',' << fmt_real(r.lhs) << ','
       << fmt_real(r.rhs) << ',' << fmt_real(r.oriented_slack) << ',' << fmt_real(r.tolerance) << ','
       << (r.satisfied ? "true" : "false") << ',' << to_string(r.equality_flag) << ','
       << (r.exact ? "true" : "false") << ',' << (r.precondition_met ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string search_config_to_json(const SearchConfig& config) { return dump(config_json(config)); }

SearchConfig search_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("search config must be an object");
  SearchConfig c;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "schema") {
        if (v != "search-config/1") throw ParseError("unsupported schema, expected search-config/1");
      } else if (k == "problem") {
        c.problem = v.get<std::string>();
      } else if (k == "n") {
        c.n = v.get<int>();
      } else if (k == "m") {
        c.m = v.get<int>();
      } else if (k == "family") {
        c.family = v.get<std::string>();
      } else if (k == "family_size") {
        c.family_size = v.get<int>();
      } else if (k == "iterations") {
        c.iterations = v.get<int>();
      } else if (k == "restarts") {
        c.restarts = v.get<int>();
      } else if (k == "scale") {
        c.scale = real_from(v);
      } else if (k == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (k == "c") {
        if (!v.is_null()) c.c = real_from(v);
      } else if (k == "tolerance") {
        c.tolerance = real_from(v);
      } else if (k == "quad_resolution") {
        c.quad_resolution = v.get<int>();
      } else {
        throw ParseError("unexpected field \"" + k + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad search config: ") + e.what());
  }
  return c;
}

std::string search_result_to_json(const SearchConfig& config, const SearchResult& result) {
  json j;
  j["schema"] = "search/1";
  j["config"] = config_json(config);
  j["best_slack"] = result.best_slack;
  j["violation"] = result.violation;
  j["seed"] = result.seed;
  j["config_hash"] = result.config_hash;
  j["witness"] = result.witness ? body_json(*result.witness) : json(nullptr);
  j["best_report"] = result.best_report ? report_json(*result.best_report) : json(nullptr);
  json traj = json::array();
  for (const auto& q : result.trajectory) {
    traj.push_back({{"block", q.block}, {"min", q.min}, {"q25", q.q25}, {"median", q.median}, {"q75", q.q75},
                    {"max", q.max}});
  }
  j["trajectory"] = traj;
  return dump(j);
}

std::string trajectory_to_csv(const SearchResult& result) {
  std::ostringstream os;
  os << "block,min,q25,median,q75,max\n";
  for (const auto& q : result.trajectory) {
    os << q.block << ',' << fmt_real(q.min) << ',' << fmt_real(q.q25) << ',' << fmt_real(q.median) << ','
       << fmt_real(q.q75) << ',' << fmt_real(q.max) << '\n';
  }
  return os.str();
}

std::string environment_fingerprint() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  os << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
  os << "unknown-compiler";
#endif
  os << "; eigen " << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION;
  os << "; json " << NLOHMANN_JSON_VERSION_MAJOR << '.' << NLOHMANN_JSON_VERSION_MINOR;
  return os.str();
}

std::string finding_to_json(const std::string& config_json_text, const Body& witness, const IneqReport& report) {
  json j;
  j["schema"] = "finding/1";
  try {
    j["config"] = json::parse(config_json_text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("finding config is not JSON: ") + e.what());
  }
  j["witness"] = body_json(witness);
  j["inequality"] = report.id;
  j["params"] = report.params;
  j["status"] = to_string(report.status);
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["oriented_slack"] = report.oriented_slack;
  j["tolerance"] = report.tolerance;
  j["exact"] = report.exact;
  j["environment"] = environment_fingerprint();
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) {
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory for '" + path + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace convexiq

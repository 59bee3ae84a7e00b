#include "output.hpp"

#include <sstream>

namespace orthopoly::cli {

namespace {

std::string cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// [1,0,2] -> "1;0;2", so index labels stay in one cell.
std::string label(const json& v) {
  if (!v.is_array()) return cell(v);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
  return s;
}

std::string order_label(const json& v) {
  if (v.is_object()) return label(v["nu"]) + "|" + label(v["eps"]);
  return label(v);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

json to_json(const MultiIndex& m) { return m.to_vector(); }

json to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e.to_vector()}, {"coef", c.str()}});
  return {{"d", p.nvars()}, {"terms", terms}};
}

json to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", rep.ok()}, {"failures", rep.failures()}, {"checks", checks}};
}

std::string hat_str(const QSqrt& q) {
  if (auto r = q.as_rational()) return r->str();
  return q.str();
}

std::string hat_str(const QSqrtSum& q) {
  if (auto s = q.as_qsqrt()) return hat_str(*s);
  std::string out;
  for (const auto& t : q.terms()) out += (out.empty() ? "" : " + ") + t.coef.str() + "*sqrt(" + t.radicand.str() + ")";
  return out;
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(to_json(row));
  return rows;
}

json matrix_json(const std::vector<std::vector<QSqrt>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& q : row) r.push_back(hat_str(q));
    rows.push_back(r);
  }
  return rows;
}

std::string to_csv(const json& doc) {
  std::ostringstream os;
  if (doc.contains("entries") && doc.contains("order")) {
    const json& order = doc["order"];
    os << "row\\col";
    for (const auto& o : order) os << "," << cell(order_label(o));
    os << "\n";
    for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
      os << cell(order_label(order[i]));
      for (const auto& v : doc["entries"][i]) os << "," << cell(v);
      os << "\n";
    }
  } else if (doc.contains("checks")) {
    os << "name,ok,detail\n";
    for (const auto& c : doc["checks"]) os << cell(c["name"]) << "," << (c["ok"].get<bool>() ? "true" : "false") << "," << cell(c["detail"]) << "\n";
  } else if (doc.contains("basis")) {
    if (doc.contains("lattice")) {
      os << "nu";
      for (const auto& x : doc["lattice"]) os << "," << cell(label(x));
      os << "\n";
    }
    for (const auto& b : doc["basis"]) {
      std::string key;
      for (const char* k : {"nu", "alpha", "eps"})
        if (b.contains(k)) key += (key.empty() ? "" : "|") + label(b[k]);
      if (b.contains("values")) {
        os << cell(key);
        for (const auto& v : b["values"]) os << "," << cell(v);
        os << "\n";
      } else {
        for (const auto& t : b["poly"]["terms"]) os << cell(key) << "," << cell(label(t["exp"])) << "," << cell(t["coef"]) << "\n";
      }
    }
  } else if (doc.contains("rows")) {
    for (const auto& r : doc["rows"]) {
      bool first = true;
      for (const auto& v : r) {
        os << (first ? "" : ",") << cell(v.is_array() ? json(label(v)) : v);
        first = false;
      }
      os << "\n";
    }
  } else {
    for (const auto& [k, v] : doc.items()) os << cell(k) << "," << cell(v) << "\n";
  }
  return os.str();
}

}  // namespace orthopoly::cli

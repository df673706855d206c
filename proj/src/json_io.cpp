#include "flagk/json_io.hpp"

#include <sstream>

#include "flagk/qbg.hpp"
#include "flagk/qkring.hpp"

namespace flagk {

nlohmann::json to_json(const Perm& w) { return nlohmann::json(w.p); }

nlohmann::json to_json(const Weight& w) { return nlohmann::json(w.c); }

nlohmann::json to_json(const Root& r, int sign) {
  return nlohmann::json{{"i", r.i}, {"j", r.j}, {"sign", sign}};
}

nlohmann::json to_json(const Coroot& xi) { return nlohmann::json(xi.a); }

namespace {

nlohmann::json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return nlohmann::json(c.get_si());
  return nlohmann::json(c.get_str());
}

}  // namespace

nlohmann::json to_json(const GroupAlg& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : f.t)
    terms.push_back(nlohmann::json{{"weight", w.c}, {"coeff", coeff_to_json(c)}});
  return nlohmann::json{{"terms", std::move(terms)}};
}

nlohmann::json to_json(const QbgGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& outs : g.out)
    for (const Edge& e : outs)
      edges.push_back(nlohmann::json{{"source", g.at(e.src).p},
                                     {"target", g.at(e.dst).p},
                                     {"label", to_json(e.label)},
                                     {"kind", e.quantum ? "quantum" : "bruhat"}});
  nlohmann::json verts = nlohmann::json::array();
  for (const Perm& v : g.verts) verts.push_back(v.p);
  return nlohmann::json{{"n", g.n},
                        {"parabolic", g.J},
                        {"bruhat_only", g.bruhat_only},
                        {"vertices", std::move(verts)},
                        {"edges", std::move(edges)}};
}

Perm perm_from_json(const nlohmann::json& j) {
  return Perm(j.get<std::vector<int>>());
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.t)
    terms.push_back(nlohmann::json{{"xdeg", k.xd}, {"qdeg", k.qd}, {"coeff", to_json(c)}});
  return nlohmann::json{{"rank", p.nr},
                        {"xvars", p.nx},
                        {"qvars", p.nq},
                        {"qcap", p.qcap},
                        {"terms", std::move(terms)}};
}

namespace {

mpz_class coeff_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

GroupAlg groupalg_from_json(const nlohmann::json& j) {
  GroupAlg f;
  for (const auto& term : j.at("terms"))
    f.add_term(Weight(term.at("weight").get<std::vector<i64>>()),
               coeff_from_json(term.at("coeff")));
  return f;
}

}  // namespace

QPoly qpoly_from_json(const nlohmann::json& j) {
  QPoly p(j.at("rank").get<int>(), j.at("xvars").get<int>(), j.at("qvars").get<int>(),
          j.at("qcap").get<int>());
  for (const auto& term : j.at("terms")) {
    QKey k{term.at("xdeg").get<std::vector<int>>(), term.at("qdeg").get<std::vector<int>>()};
    if (int(k.xd.size()) != p.nx || int(k.qd.size()) != p.nq)
      throw std::invalid_argument("qpoly_from_json: multidegree length mismatch");
    p.add_term(k, groupalg_from_json(term.at("coeff")));
  }
  return p;
}

std::string to_dot(const QbgGraph& g) {
  std::ostringstream os;
  os << "digraph qbg {\n";
  auto name = [](const Perm& w) {
    std::string s = "\"";
    for (int i = 1; i <= w.size(); ++i) {
      if (i > 1) s += ' ';
      s += std::to_string(w(i));
    }
    return s + "\"";
  };
  for (const Perm& v : g.verts) os << "  " << name(v) << ";\n";
  for (const auto& outs : g.out)
    for (const Edge& e : outs) {
      os << "  " << name(g.at(e.src)) << " -> " << name(g.at(e.dst)) << " [label=\"a_{"
         << e.label.i << "," << e.label.j << "}\"";
      if (e.quantum) os << ", style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace flagk

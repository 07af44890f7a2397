#include "cliffroots/report.hpp"

#include <algorithm>
#include <sstream>

namespace cliffroots {

namespace {

std::string plural(std::uint64_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : word.back() == 's' ? "es" : "s");
}

Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

}  // namespace

Json to_json(const AlgebraClassification& cls) {
  Json j;
  j["p"] = cls.sig.p();
  j["q"] = cls.sig.q();
  j["n"] = cls.sig.n();
  j["s"] = cls.sig.s();
  j["ring"] = std::string(ring_name(cls.ring));
  j["d"] = cls.d;
  j["matrix_form"] = cls.matrix_form();
  j["dim"] = cls.dim;
  j["group_components"] = cls.group_components;
  j["class_count"] = cls.class_count;
  j["ordinary_class_dim"] = cls.ordinary_class_dim;
  j["has_exceptional"] = cls.has_exceptional;
  return j;
}

Json to_json(const RootClassReport& r) {
  Json j;
  j["p"] = r.sig.p();
  j["q"] = r.sig.q();
  j["k"] = r.k;
  j["spec"] = optional_rational(r.spec);
  j["scal"] = to_string(r.scal);
  j["class_dim"] = r.class_dim;
  j["centralizer_dim"] = r.centralizer_dim;
  j["representative"] = to_string(r.representative);
  if (r.char_poly)
    j["char_poly"] = Json{{"n1", r.char_poly->n1}, {"n2", r.char_poly->n2}};
  else
    j["char_poly"] = nullptr;
  j["min_poly"] = r.min_poly ? Json(to_string(*r.min_poly)) : Json(nullptr);
  j["ordinary"] = r.ordinary;
  j["class_cdim"] = r.class_cdim ? Json(*r.class_cdim) : Json(nullptr);
  j["centralizer_cdim"] = r.centralizer_cdim ? Json(*r.centralizer_cdim) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& b : r.centralizer_basis) basis.push_back(to_string(b));
  j["centralizer_basis"] = basis;
  return j;
}

Json to_json(const MatrixRep& rep) {
  Json j;
  j["p"] = rep.signature().p();
  j["q"] = rep.signature().q();
  j["idempotent"] = to_string(rep.idempotent().element);
  j["k_generator"] = to_string(rep.k_generator());
  Json basis = Json::array();
  for (const auto& b : rep.ideal_basis()) basis.push_back(to_string(b));
  j["ideal_basis"] = basis;
  Json images = Json::array();
  for (const auto& m : rep.generator_images()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c)
        row.push_back(Json{{"re", to_string(m(r, c).re)}, {"im", to_string(m(r, c).im)}});
      rows.push_back(row);
    }
    images.push_back(rows);
  }
  j["generator_images"] = images;
  return j;
}

Json to_json(const GoldenResult& result) {
  Json j;
  j["source"] = result.source;
  j["passed"] = result.passed();
  j["checks"] = result.checks.size();
  Json failures = Json::array();
  for (const auto& c : result.checks)
    if (!c.passed) failures.push_back(Json{{"location", c.location}, {"check", c.name}, {"detail", c.detail}});
  j["failures"] = failures;
  return j;
}

std::string classification_text(const AlgebraClassification& cls) {
  std::ostringstream os;
  os << cls.sig.name() << ": " << cls.matrix_form() << ", d=" << cls.d << ", "
     << plural(cls.class_count, "class") << ", " << plural(cls.group_components, "component") << "\n";
  os << "n: " << cls.sig.n() << "\n";
  os << "s: " << cls.sig.s() << "\n";
  os << "ring: " << ring_name(cls.ring) << "\n";
  os << "dim: " << cls.dim << "\n";
  os << "group components: " << cls.group_components << "\n";
  os << "root classes: " << cls.class_count << "\n";
  os << "ordinary class dim: " << cls.ordinary_class_dim << "\n";
  os << "exceptional roots: " << (cls.has_exceptional ? "yes" : "no") << "\n";
  return os.str();
}

std::string roots_text(const std::vector<RootClassReport>& reports) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"k", "f_k", "Delta_k(t)", "Spec", "class dim", "centralizer dim"});
  for (const auto& r : reports)
    rows.push_back({std::to_string(r.k), to_string(r.representative),
                    r.char_poly ? to_string(*r.char_poly) : "-", r.spec ? to_string(*r.spec) : "-",
                    std::to_string(r.class_dim), std::to_string(r.centralizer_dim)});
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  if (!reports.empty()) os << reports.front().sig.name() << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 6; ++c) {
      if (c) line += " | ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? pad + row[c] : row[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string roots_csv(const std::vector<RootClassReport>& reports) {
  std::ostringstream os;
  os << "p,q,k,representative,char_poly,min_poly,spec,scal,class_dim,centralizer_dim\n";
  for (const auto& r : reports) {
    os << r.sig.p() << ',' << r.sig.q() << ',' << r.k << ",\"" << to_string(r.representative) << "\","
       << (r.char_poly ? to_string(*r.char_poly) : "") << ',' << (r.min_poly ? to_string(*r.min_poly) : "")
       << ',' << (r.spec ? to_string(*r.spec) : "") << ',' << to_string(r.scal) << ',' << r.class_dim << ','
       << r.centralizer_dim << "\n";
  }
  return os.str();
}

std::string represent_text(const MatrixRep& rep) {
  std::ostringstream os;
  os << rep.signature().name() << " = M(" << rep.size() << ",C)\n";
  os << "idempotent: " << to_string(rep.idempotent().element) << "\n";
  os << "i = " << to_string(rep.k_generator()) << "\n";
  os << "ideal basis:";
  for (Blade b : rep.ideal_blades()) os << " " << (b.mask == 0 ? std::string("Id") : b.name());
  os << "\n";
  const auto images = rep.generator_images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    os << "\ne" << (i + 1) << " =\n" << format_matrix_grid(images[i], rep);
  }
  return os.str();
}

std::string golden_text(const GoldenResult& result) {
  std::ostringstream os;
  for (const auto& c : result.checks)
    if (!c.passed) os << "FAIL " << c.location << " [" << c.name << "] " << c.detail << "\n";
  os << (result.passed() ? "PASS " : "FAIL ") << result.source << ": " << result.checks.size() - result.failures()
     << "/" << result.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace cliffroots

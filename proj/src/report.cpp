#include "covrough/report.hpp"

#include <algorithm>
#include <sstream>

#include "covrough/covering_io.hpp"
#include "covrough/degrees.hpp"
#include "covrough/neighborhoods.hpp"

namespace covrough {

namespace {

constexpr std::string_view kNone = "—";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Display width of a UTF-8 string: counts code points.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line.append(width[i] - display_width(r[i]) + 2, ' ');
      }
      os << "  " << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join_labels(const Universe& u, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += u.label(xs[i]);
  }
  return out;
}

nlohmann::ordered_json labels_json(const Universe& u, Block b) { return block_labels(u, b); }

nlohmann::ordered_json family_json(const Universe& u, std::span<const Block> blocks) {
  auto out = nlohmann::ordered_json::array();
  for (auto b : blocks) out.push_back(labels_json(u, b));
  return out;
}

}  // namespace

AnalysisReport analyze(const Covering& c, bool with_common_degrees) {
  const auto& u = c.universe();
  const auto nm = neighborhood_map(c);
  const auto cores = core_blocks(c);
  const auto red = reducibility(c);

  AnalysisReport r{c, {}, std::nullopt, {}, {}, is_invariable(c), nm.family, nm.family == c};
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Element x{i};
    r.elements.push_back({x, membership_repeat_degree(c, x), nm[x], cores.per_element[i]});
  }
  if (with_common_degrees) r.common_degrees = degree_profile(c).common;

  for (std::size_t b = 0; b < c.size(); ++b) {
    BlockRow row{c[b], {}, red.per_block[b]};
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (cores.per_element[i] == c[b]) row.core_block_of.push_back(Element{i});
    }
    r.blocks.push_back(std::move(row));
  }

  r.classification = {is_partition(c), red.is_irreducible_covering, r.invariability.invariable,
                      is_cov_fixed_point(c)};
  return r;
}

std::string render_text(const AnalysisReport& r) {
  const auto& u = r.covering.universe();
  std::ostringstream os;
  os << "covering: " << format_family(u, r.covering.blocks()) << '\n';
  os << "universe: " << u.size() << " elements, " << r.covering.size() << " blocks\n\n";

  os << "elements:\n";
  Table elements({"x", "degree", "N(x)", "core block"});
  for (const auto& e : r.elements) {
    elements.add({u.label(e.element), std::to_string(e.membership_degree), format_block(u, e.neighborhood),
                  e.core_block ? format_block(u, *e.core_block) : std::string(kNone)});
  }
  elements.print(os);

  if (r.common_degrees) {
    os << "\ncommon block repeat degrees:\n";
    std::vector<std::string> header{""};
    for (const auto& n : u.names()) header.push_back(n);
    Table lambda(std::move(header));
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::vector<std::string> row{u.names()[i]};
      for (auto v : (*r.common_degrees)[i]) row.push_back(std::to_string(v));
      lambda.add(std::move(row));
    }
    lambda.print(os);
  }

  os << "\nblocks:\n";
  Table blocks({"block", "core block of", "reducible"});
  for (const auto& b : r.blocks) {
    std::string reducible = "no";
    if (b.witness) reducible = "yes: union of " + format_family(u, *b.witness);
    blocks.add({format_block(u, b.block), b.core_block_of.empty() ? "none" : join_labels(u, b.core_block_of),
                std::move(reducible)});
  }
  blocks.print(os);

  const auto& cl = r.classification;
  os << "\nclassification: partition: " << yes_no(cl.partition) << ", irreducible: " << yes_no(cl.irreducible)
     << ", invariable: " << yes_no(cl.invariable) << ", Cov(C)=C: " << yes_no(cl.cov_fixed_point) << '\n';
  if (!cl.invariable) {
    os << "not invariable:";
    if (!r.invariability.reducible_blocks.empty()) {
      os << " reducible blocks " << format_family(u, r.invariability.reducible_blocks) << ';';
    }
    if (!r.invariability.elements_without_core.empty()) {
      os << " no core block for " << join_labels(u, r.invariability.elements_without_core) << ';';
    }
    os << '\n';
  }
  os << "Cov(C): " << format_family(u, r.cov.blocks()) << (r.cov_equals_input ? " (equal to C)" : " (differs from C)")
     << '\n';
  return os.str();
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  const auto& u = r.covering.universe();
  nlohmann::ordered_json j;
  j["covering"] = covering_to_json(r.covering);

  auto elements = nlohmann::ordered_json::array();
  for (const auto& e : r.elements) {
    nlohmann::ordered_json row;
    row["element"] = u.label(e.element);
    row["membership_degree"] = e.membership_degree;
    row["neighborhood"] = labels_json(u, e.neighborhood);
    row["core_block"] = e.core_block ? labels_json(u, *e.core_block) : nlohmann::ordered_json(nullptr);
    elements.push_back(std::move(row));
  }
  j["elements"] = std::move(elements);
  if (r.common_degrees) j["common_degrees"] = *r.common_degrees;

  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : r.blocks) {
    nlohmann::ordered_json row;
    row["block"] = labels_json(u, b.block);
    auto of = nlohmann::ordered_json::array();
    for (auto x : b.core_block_of) of.push_back(u.label(x));
    row["core_block_of"] = std::move(of);
    row["reducible"] = b.witness.has_value();
    row["witness"] = b.witness ? family_json(u, *b.witness) : nlohmann::ordered_json(nullptr);
    blocks.push_back(std::move(row));
  }
  j["blocks"] = std::move(blocks);

  const auto& cl = r.classification;
  j["classification"] = {{"partition", cl.partition},
                         {"irreducible", cl.irreducible},
                         {"invariable", cl.invariable},
                         {"cov_fixed_point", cl.cov_fixed_point}};
  auto missing = nlohmann::ordered_json::array();
  for (auto x : r.invariability.elements_without_core) missing.push_back(u.label(x));
  j["invariability"] = {{"reducible_blocks", family_json(u, r.invariability.reducible_blocks)},
                        {"elements_without_core", std::move(missing)}};
  j["cov"] = covering_to_json(r.cov);
  j["cov_equals_input"] = r.cov_equals_input;
  return j;
}

std::string render_text(const VerificationSummary& s) {
  std::ostringstream os;
  Table t({"universe size", std::to_string(s.universe_size)});
  t.add({"coverings", std::to_string(s.total_coverings)});
  t.add({"partitions", std::to_string(s.partitions)});
  t.add({"irreducible", std::to_string(s.irreducible)});
  t.add({"invariable", std::to_string(s.invariable)});
  t.add({"Cov fixed points", std::to_string(s.fixed_points)});
  t.add({"laws", s.full_laws ? std::to_string(all_laws().size()) + " (full)" : std::string("census only")});
  t.add({"violations", std::to_string(s.violations.size())});
  t.print(os);
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < s.violations.size() && i < kShown; ++i) {
    const auto& v = s.violations[i];
    os << "  violated " << to_string(v.law) << " by " << format_family(v.covering.universe(), v.covering.blocks())
       << '\n';
  }
  if (s.violations.size() > kShown) os << "  ... " << s.violations.size() - kShown << " more\n";
  os << (s.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

nlohmann::ordered_json to_json(const VerificationSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.universe_size;
  j["total"] = s.total_coverings;
  j["partitions"] = s.partitions;
  j["irreducible"] = s.irreducible;
  j["invariable"] = s.invariable;
  j["fixed_points"] = s.fixed_points;
  j["full_laws"] = s.full_laws;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"law", std::string(to_string(v.law))}, {"covering", covering_to_json(v.covering)}});
  }
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace covrough

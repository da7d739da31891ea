// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covrough/cli.hpp"
#include "covrough/covering_io.hpp"
#include "covrough/degrees.hpp"
#include "covrough/neighborhoods.hpp"
#include "covrough/oracle.hpp"
#include "covrough/reduction.hpp"

using namespace covrough;

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

Covering fixture(const char* name) { return load_covering(std::filesystem::path(COVROUGH_FIXTURES) / name); }

Block block(const Covering& c, std::initializer_list<const char*> labels) {
  Block b;
  for (auto l : labels) b |= Block::singleton(c.universe().element(l));
  return b;
}

Element el(const Covering& c, const char* label) { return c.universe().element(label); }

nlohmann::json verify_json(int n) {
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--n", std::to_string(n), "--json"}, out, err);
  auto j = nlohmann::json::parse(out.str());
  j["exit_code"] = code;
  return j;
}

void golden_examples(Checker& t) {
  const auto ex3 = fixture("example3.json");
  t.expect(neighborhood(ex3, el(ex3, "1")) == block(ex3, {"1"}), "ex3 N(1)={1}");
  t.expect(neighborhood(ex3, el(ex3, "2")) == block(ex3, {"1", "2"}), "ex3 N(2)={1,2}");
  t.expect(neighborhood(ex3, el(ex3, "3")) == block(ex3, {"3"}), "ex3 N(3)={3}");
  t.expect(cov(ex3) == ex3, "ex3 Cov(C)=C");
  t.expect(!is_partition(ex3), "ex3 not a partition");

  const auto ex4 = fixture("example4.json");
  t.expect(membership_repeat_degree(ex4, el(ex4, "1")) == 1, "ex4 d(1)=1");
  t.expect(membership_repeat_degree(ex4, el(ex4, "2")) == 2, "ex4 d(2)=2");
  t.expect(membership_repeat_degree(ex4, el(ex4, "3")) == 1, "ex4 d(3)=1");
  t.expect(blocks_containing(ex4, el(ex4, "2")) == std::vector<Block>{block(ex4, {"1", "2"}), block(ex4, {"2", "3"})},
           "ex4 blocks containing 2");

  const auto ex5 = fixture("example5.json");
  auto lambda = [&](const char* x, const char* y) { return common_block_repeat_degree(ex5, el(ex5, x), el(ex5, y)); };
  t.expect(lambda("1", "2") == 1 && lambda("2", "3") == 1 && lambda("2", "4") == 1, "ex5 l=1 pairs");
  t.expect(lambda("1", "3") == 0 && lambda("1", "4") == 0, "ex5 l=0 pairs");
  t.expect(lambda("3", "4") == 2, "ex5 l(3,4)=2");

  const auto ex12 = fixture("example12.json");
  const auto k1 = block(ex12, {"1", "2"});
  t.expect(core_block(ex12, el(ex12, "1")) == k1 && core_block(ex12, el(ex12, "2")) == k1, "ex12 core(1)=core(2)=K1");
  t.expect(core_block(ex12, el(ex12, "4")) == block(ex12, {"3", "4"}), "ex12 core(4)=K3");
  t.expect(!core_block(ex12, el(ex12, "3")), "ex12 3 has no core block");
  t.expect(non_core_blocks(ex12) == std::vector<Block>{block(ex12, {"1", "2", "3"})}, "ex12 K2 non-core");

  const auto ex14 = fixture("example14.json");
  bool none = true;
  for (std::size_t i = 0; i < 3; ++i) none = none && !core_block(ex14, Element{i});
  t.expect(none, "ex14 no element has a core block");
  t.expect(non_core_blocks(ex14).size() == 3, "ex14 all blocks non-core");
  t.expect(is_irreducible(ex14), "ex14 no block reducible");

  const auto ex19 = fixture("example19.json");
  t.expect(core_blocks(ex19).every_element_has_core(), "ex19 every element has a core block");
  const auto k4 = block(ex19, {"1", "2"});
  t.expect(non_core_blocks(ex19) == std::vector<Block>{k4}, "ex19 K4 non-core");
  const auto w = is_reducible_element(ex19, k4);
  t.expect(w && *w == std::vector<Block>{block(ex19, {"1"}), block(ex19, {"2"})}, "ex19 K4 = K1 u K2");

  const auto ex20 = fixture("example20.json");
  t.expect(core_block(ex20, el(ex20, "1")) == block(ex20, {"1", "2"}), "ex20 core(1)=K1");
  t.expect(core_block(ex20, el(ex20, "3")) == block(ex20, {"2", "3"}), "ex20 core(3)=K2");
  t.expect(!core_block(ex20, el(ex20, "2")), "ex20 2 has no core block");
}

void refutation(Checker& t) {
  const auto ex3 = fixture("example3.json");
  t.expect(is_cov_fixed_point(ex3), "ex3 Cov(C)=C");
  t.expect(!is_partition(ex3), "ex3 is not a partition");
  const auto j = verify_json(3);
  t.expect(j["exit_code"] == 0, "verify --n 3 exit code");
  t.expect(j["fixed_points"].get<std::uint64_t>() > j["partitions"].get<std::uint64_t>(),
           "fixed points outnumber partitions for n=3");
}

void exhaustive(Checker& t, int n, std::uint64_t total, std::uint64_t partitions, std::uint64_t irreducible,
                std::uint64_t fixed_points) {
  const auto j = verify_json(n);
  const auto tag = "n=" + std::to_string(n) + " ";
  t.expect(j["exit_code"] == 0, tag + "exit code");
  t.expect(j["violations"].empty(), tag + "violations: " + j["violations"].dump());
  t.expect(j["full_laws"] == true, tag + "full law set");
  t.expect(j["total"] == total, tag + "total coverings");
  t.expect(j["partitions"] == partitions, tag + "partitions");
  t.expect(j["irreducible"] == irreducible, tag + "irreducible");
  t.expect(j["invariable"] == fixed_points, tag + "invariable");
  t.expect(j["fixed_points"] == fixed_points, tag + "fixed points");
}

void dual_route(Checker& t) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto stream = enumerate_coverings(n);
    while (auto c = stream.next()) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto by_intersection = core_block(*c, Element{i});
        const auto by_definition = core_block_candidates(*c, Element{i});
        const bool agree = by_definition.size() <= 1 &&
                           (by_definition.empty() ? !by_intersection
                                                  : by_intersection && *by_intersection == by_definition.front());
        if (!agree) {
          t.expect(false, "disagreement on " + format_family(c->universe(), c->blocks()));
          return;
        }
      }
    }
  }
}

void inverse_problem(Checker& t) {
  std::size_t most = 0;
  auto stream = enumerate_coverings(3);
  while (auto d = stream.next()) {
    const auto found = preimages(*d);
    const auto name = format_family(d->universe(), d->blocks());
    if (is_cov_fixed_point(*d)) {
      t.expect(!found.empty(), "fixed point without preimage " + name);
      t.expect(std::find(found.begin(), found.end(), *d) != found.end(), "fixed point not its own preimage " + name);
    } else {
      t.expect(found.empty(), "non-fixed point with preimages " + name);
    }
    most = std::max(most, found.size());
  }
  t.expect(most >= 2, "some neighborhoods has at least two preimages");
}

}  // namespace

int main() {
  // Frozen from the independent brute-force census.
  const std::vector<Criterion> criteria = {
      {"1 golden examples 3,4,5,12,14,19,20", 1.0, golden_examples},
      {"2 refutation: invariable non-partition, fixed points > partitions (n=3)", 1.0, refutation},
      {"3a exhaustive laws n=3 (109 coverings)", 1.0, [](Checker& t) { exhaustive(t, 3, 109, 5, 45, 29); }},
      {"3b exhaustive laws n=4 (32297 coverings)", 60.0, [](Checker& t) { exhaustive(t, 4, 32297, 15, 2271, 355); }},
      {"4 core block dual-route agreement |U|<=4", 60.0, dual_route},
      {"5 inverse problem |U|=3", 10.0, inverse_problem},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Checker t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.budget_seconds) {
      t.expect(false, "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    const bool ok = t.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << "  (" << seconds << " s, budget " << c.budget_seconds
              << " s)\n";
    for (const auto& f : t.failures()) std::cout << "     - " << f << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance                  all criteria
//   acceptance --criterion 7    just one (repeatable)

#include "cli.hpp"
#include "hexafern/count.hpp"
#include "hexafern/formulas.hpp"
#include "hexafern/regions.hpp"
#include "hexafern/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hexafern;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

VerificationReport suite(const std::string& name) {
  SuiteConfig c;
  c.suites = {name};
  return run_suite(name, c);
}

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << r.suite << " " << r.cases_run << " cases, " << r.skipped << " skipped, " << r.failures.size() << " failures";
  return s.str();
}

// Prints failing detail to stderr and folds the report into the outcome.
void fold(Outcome& o, const VerificationReport& r) {
  if (!r.passed()) {
    o.pass = false;
    std::cerr << report_text(r);
  }
  o.detail += (o.detail.empty() ? "" : "; ") + summary(r);
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + ("not met: " + what);
  }
}

std::size_t with_prefix(const VerificationReport& r, const std::string& prefix) {
  return static_cast<std::size_t>(std::count_if(r.executed.begin(), r.executed.end(),
                                                [&](const std::string& p) { return p.rfind(prefix, 0) == 0; }));
}

std::size_t containing(const VerificationReport& r, const std::string& part) {
  return static_cast<std::size_t>(std::count_if(r.executed.begin(), r.executed.end(),
                                                [&](const std::string& p) { return p.find(part) != std::string::npos; }));
}

Outcome single(const std::string& name) {
  Outcome o;
  fold(o, suite(name));
  return o;
}

Outcome criterion3() {
  Outcome o = single("qk");
  RegionSpec s;
  s.family = Family::Qp;
  s.t = {1, 1};
  const Rational oracle = count_tilings(build(s)).value;
  const Rational formula = eval_Q_primed({1, 1}).value;
  require(o, oracle == ratio(3, 2) && formula == ratio(3, 2), "Q'(1,1) == 3/2 by oracle and formula");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto r = suite("kuo");
  fold(o, r);
  const std::size_t even = with_prefix(r, "even"), odd = with_prefix(r, "odd");
  o.detail += " (" + std::to_string(even) + " even, " + std::to_string(odd) + " odd)";
  require(o, even >= 20 && odd >= 20, ">= 20 points per recurrence");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t total = 0;
  for (const char* name : {"splits", "z0", "degenerate"}) {
    const auto r = suite(name);
    fold(o, r);
    total += r.cases_run;
  }
  require(o, total >= 30, ">= 30 points");
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const char* name : {"rohatgi", "corollary"}) {
    const auto r = suite(name);
    fold(o, r);
    require(o, r.cases_run >= 20, std::string(name) + " >= 20 points");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto r = suite("factorization");
  fold(o, r);
  std::size_t even = 0, odd = 0;
  for (const auto& p : r.executed) {
    const int x = std::stoi(p.substr(p.find("x=") + 2));
    (x % 2 == 0 ? even : odd)++;
  }
  require(o, r.cases_run >= 5 && even > 0 && odd > 0, ">= 5 points covering both parities of x");
  return o;
}

Outcome criterion11() {
  Outcome o;
  fold(o, suite("dual"));
  fold(o, suite("memo"));
  return o;
}

// Enough of XML to reject a malformed document: balanced, properly nested
// tags with quoted attribute values.
bool well_formed(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0, roots = 0;
  while ((i = doc.find('<', i)) != std::string::npos) {
    const std::size_t end = doc.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = doc.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?') {
      if (tag.back() != '?') return false;
      continue;
    }
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag.front() == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" /"));
    if (stack.empty()) ++roots;
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty() && roots == 1;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "hexafern");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Outcome criterion12() {
  Outcome o;
  std::vector<FernSeq> ferns{{}};
  for (std::size_t from = 0, len = 1; len <= 3; ++len) {
    const std::size_t to = ferns.size();
    for (std::size_t i = from; i < to; ++i) {
      for (int v : {1, 2}) {
        FernSeq f = ferns[i];
        f.push_back(v);
        ferns.push_back(f);
      }
    }
    from = to;
  }
  std::size_t compared = 0, mismatched = 0, rendered = 0, bad_svg = 0;
  for (const auto& a : ferns) {
    for (int x = 0; x <= 2; ++x) {
      for (int y = 0; y <= 3; ++y) {
        for (int z = 0; z <= 2; ++z) {
          for (Family f : {Family::R, Family::Rp}) {
            RegionSpec s;
            s.family = f;
            s.x = x;
            s.y = y;
            s.z = z;
            s.fern = a;
            if (!main_hypothesis(y, a) || !buildable(s)) continue;
            const std::string doc = cli::spec_document(s);
            const CliRun count = cli_run({"count", doc});
            const CliRun formula = cli_run({"formula", doc});
            ++compared;
            if (count.code != 0 || formula.code != 0 || count.out != formula.out) {
              ++mismatched;
              std::cerr << "count/formula differ for " << doc << ": " << count.out << " vs " << formula.out;
            }
            const CliRun svg = cli_run({"render", "--tiling", doc});
            ++rendered;
            std::size_t polygons = 0;
            for (auto p = svg.out.find("<polygon"); p != std::string::npos; p = svg.out.find("<polygon", p + 1)) ++polygons;
            if (svg.code != 0 || !well_formed(svg.out) || polygons != build(s).size() / 2) {
              ++bad_svg;
              std::cerr << "bad SVG for " << doc << "\n";
            }
          }
        }
      }
    }
  }
  o.detail = std::to_string(compared) + " count/formula pairs, " + std::to_string(mismatched) + " differ; " +
             std::to_string(rendered) + " SVGs, " + std::to_string(bad_svg) + " malformed";
  o.pass = compared > 0 && mismatched == 0 && bad_svg == 0;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      [] { return single("proctor"); },   [] { return single("ciucu"); }, criterion3,
      [] { return single("quartered"); }, [] { return single("lgv"); },   [] { return single("main"); },
      criterion7,                         criterion8,                     criterion9,
      criterion10,                        criterion11,                    criterion12};

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (int n = 1; n <= 12; ++n) selected.insert(n);
  }

  bool all = true;
  for (int n : selected) {
    if (n < 1 || n > 12) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ", " << time << ")"
              << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

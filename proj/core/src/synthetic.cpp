#include "rtk/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rtk {
namespace {

using namespace std::chrono;

constexpr std::int64_t kDay = 86400;
constexpr std::array<Letter, 4> kLetters{Letter::B, Letter::I, Letter::F, Letter::T};

StateSymbol st(const char* text) { return *parse_state(text); }

std::string_view type_name_for(StateSymbol atomic) {
  if (atomic == StateSymbol::of(Letter::B)) return "Bug";
  if (atomic == StateSymbol::of(Letter::I)) return "Improvement";
  if (atomic == StateSymbol::of(Letter::F)) return "New Feature";
  if (atomic == StateSymbol::of(Letter::T)) return "Task";
  return "Wish";
}

struct Builder {
  std::mt19937_64 rng;
  SyntheticCorpus corpus;
  std::size_t next_issue = 1;
  std::size_t next_commit = 1;

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  std::string issue_id() { return "SYN-" + std::to_string(next_issue++); }

  void add_commit(std::int64_t t, std::string message) {
    char hash[16];
    std::snprintf(hash, sizeof hash, "%08zx", next_commit++ * 2654435761U % 0xffffffffU);
    corpus.commits.push_back(CommitRecord{hash, from_seconds(t), std::move(message), {}});
  }

  IssueRecord& add_issue(StateSymbol type, std::int64_t created, std::int64_t resolved,
                         std::string resolution = "Fixed") {
    IssueRecord issue;
    issue.id = issue_id();
    issue.type = IssueType::from_name(type_name_for(type));
    issue.created = from_seconds(created);
    issue.resolved = from_seconds(resolved);
    issue.resolution = std::move(resolution);
    issue.status = "Closed";
    corpus.issues.push_back(std::move(issue));
    return corpus.issues.back();
  }

  // Covers [lo, hi] with 1-3 chained, overlapping issues of one type.
  void cover(StateSymbol type, std::int64_t lo, std::int64_t hi, bool may_predate) {
    const auto pieces = static_cast<int>(uniform_int(1, 3));
    std::vector<std::int64_t> cuts{lo};
    for (int p = 1; p < pieces; ++p) cuts.push_back(lo + (hi - lo) * p / pieces);
    cuts.push_back(hi);
    for (int p = 0; p < pieces; ++p) {
      std::int64_t created = cuts[p];
      std::int64_t resolved = cuts[p + 1];
      const std::int64_t overlap = (hi - lo) / (4 * pieces);
      if (p > 0) created -= overlap;
      if (p == 0 && may_predate && chance(0.5)) created -= uniform_int(1, 60) * kDay;
      add_issue(type, created, resolved);
    }
  }
};

}  // namespace

const std::vector<FamilyTemplate>& planted_families() {
  static const std::vector<FamilyTemplate> families{
      {"complex-then-atomic", {{st("BIF"), 0.55}, {st("B"), 0.45}}},
      {"clean-interlude", {{st("BI"), 0.3}, {st("Z"), 0.25}, {st("B"), 0.25}, {st("I"), 0.2}}},
      {"single-atomic", {{st("I"), 1.0}}},
      {"technical-churn", {{st("BIFT"), 0.25}, {st("BIF"), 0.2}, {st("BIT"), 0.2}, {st("T"), 0.15}, {st("BIF"), 0.2}}},
      {"stepwise-simplification", {{st("BIFT"), 0.25}, {st("BIT"), 0.25}, {st("BI"), 0.25}, {st("B"), 0.25}}},
      {"feature-heavy", {{st("IFT"), 0.35}, {st("F"), 0.3}, {st("X"), 0.15}, {st("FT"), 0.2}}},
  };
  return families;
}

SyntheticCorpus generate_corpus(const SyntheticOptions& options) {
  const auto& families = planted_families();
  if (options.family_sizes.size() > families.size()) {
    throw std::invalid_argument("at most " + std::to_string(families.size()) + " families");
  }
  Builder b{std::mt19937_64{options.seed}, {}};

  std::vector<std::size_t> order;
  for (std::size_t f = 0; f < options.family_sizes.size(); ++f) {
    order.insert(order.end(), options.family_sizes[f], f);
  }
  std::shuffle(order.begin(), order.end(), b.rng);

  std::vector<ReleaseWindow> windows;
  std::int64_t cursor = to_seconds(sys_days{year{2010} / January / 1});
  for (std::size_t r = 0; r < order.size(); ++r) {
    const FamilyTemplate& family = families[order[r]];
    char id_buf[32];
    std::snprintf(id_buf, sizeof id_buf, "syn-%03zu", r + 1);
    const std::string release_id = id_buf;
    const std::int64_t inception = cursor;
    const std::int64_t duration = b.uniform_int(30, 150) * kDay;
    const std::int64_t ending = inception + duration;
    windows.push_back(ReleaseWindow{release_id, from_seconds(inception), from_seconds(ending)});

    // Jittered phase boundaries.
    std::vector<double> shares;
    for (const auto& phase : family.phases) {
      shares.push_back(phase.second * (1.0 + b.uniform(-options.jitter, options.jitter)));
    }
    const double total = std::accumulate(shares.begin(), shares.end(), 0.0);
    std::vector<std::int64_t> bounds{inception};
    double acc = 0.0;
    for (std::size_t p = 0; p + 1 < shares.size(); ++p) {
      acc += shares[p] / total;
      bounds.push_back(inception + static_cast<std::int64_t>(acc * static_cast<double>(duration)));
    }
    bounds.push_back(ending);

    std::vector<StateSymbol> phases;
    for (const auto& phase : family.phases) {
      StateSymbol s = phase.first;
      if (s.complexity() == 1 && s.is_letter_state() && b.chance(options.letter_swap_rate)) {
        if (s == StateSymbol::of(Letter::B)) s = StateSymbol::of(Letter::I);
        else if (s == StateSymbol::of(Letter::I)) s = StateSymbol::of(Letter::B);
      }
      phases.push_back(s);
    }

    const std::size_t first_issue = b.corpus.issues.size();
    auto cover_runs = [&](auto&& holds, StateSymbol type) {
      std::size_t p = 0;
      while (p < phases.size()) {
        if (!holds(phases[p])) {
          ++p;
          continue;
        }
        std::size_t q = p;
        while (q < phases.size() && holds(phases[q])) ++q;
        b.cover(type, bounds[p], bounds[q], p == 0);
        p = q;
      }
    };
    for (Letter l : kLetters) {
      cover_runs([l](StateSymbol s) { return s.has(l); }, StateSymbol::of(l));
    }
    cover_runs([](StateSymbol s) { return s.is_other(); }, StateSymbol::other());
    const std::size_t last_issue = b.corpus.issues.size();

    // Issues the selection rules must drop.
    const std::int64_t mid = inception + duration / 2;
    b.add_issue(StateSymbol::of(Letter::B), mid - 3 * kDay, mid, "Invalid");
    {
      IssueRecord& sub = b.add_issue(StateSymbol::of(Letter::T), mid - 2 * kDay, mid - kDay);
      sub.type = IssueType::from_name("Sub-task");
      sub.parent_id = b.corpus.issues[first_issue].id;
    }
    {
      IssueRecord& open = b.add_issue(StateSymbol::of(Letter::I), mid, mid);
      open.resolved.reset();
      open.resolution.clear();
      open.status = "Open";
    }

    // Commit log: release-plugin markers around tagged and untagged work.
    b.add_commit(inception, "[maven-release-plugin] prepare for next development iteration");
    const auto n_commits = b.uniform_int(20, 60);
    std::vector<std::int64_t> times;
    for (std::int64_t c = 0; c < n_commits; ++c) times.push_back(b.uniform_int(inception + 1, ending - 1));
    std::sort(times.begin(), times.end());
    for (std::int64_t t : times) {
      std::vector<const IssueRecord*> open;
      for (std::size_t i = first_issue; i < last_issue; ++i) {
        const IssueRecord& issue = b.corpus.issues[i];
        if (to_seconds(issue.created) <= t && t <= to_seconds(*issue.resolved)) open.push_back(&issue);
      }
      if (open.empty() || !b.chance(options.tagging_rate)) {
        b.add_commit(t, "cleanup and refactoring");
        continue;
      }
      const IssueRecord* issue = open[static_cast<std::size_t>(b.uniform_int(0, static_cast<std::int64_t>(open.size()) - 1))];
      if (open.size() > 1 && b.chance(0.1)) {
        const IssueRecord* other = open[(std::find(open.begin(), open.end(), issue) - open.begin() + 1) % open.size()];
        b.add_commit(t, "Merge " + issue->id + " and " + other->id);
      } else {
        b.add_commit(t, issue->id + ": " + std::string(issue->type.name()) + " work");
      }
    }
    b.add_commit(ending, "[maven-release-plugin] prepare release " + release_id);

    cursor = ending + 60;
    b.corpus.family_of_release.push_back(order[r]);
  }
  b.corpus.manifest = make_manifest(std::move(windows));
  return std::move(b.corpus);
}

}  // namespace rtk

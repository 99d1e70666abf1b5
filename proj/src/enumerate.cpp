#include "conway/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "conway/moves.hpp"

namespace conway {
namespace {

// Colexicographic sort key of a line image: largest label most significant.
std::uint32_t ColexKey(std::array<std::uint32_t, 4> labels) {
  std::sort(labels.begin(), labels.end());
  return (labels[3] << 24) | (labels[2] << 16) | (labels[1] << 8) | labels[0];
}

// Depth-first assignment of labels 0, 1, 2, ... to points. After k labels are
// placed, the keys of all lines whose image has largest label < k are known,
// and they form a prefix of the final colex-sorted key sequence; that prefix
// is compared against the incumbent for pruning.
class LabelSearch {
 public:
  LabelSearch(std::size_t n, std::span<const Line> lines)
      : n_(n), through_(n), label_of_(n, -1) {
    for (const Line& line : lines) {
      for (std::size_t i = 0; i < 4; ++i) {
        std::array<Point, 3> others{};
        std::size_t k = 0;
        for (std::size_t j = 0; j < 4; ++j) {
          if (j != i) others[k++] = line[j];
        }
        through_[line[i]].push_back(others);
      }
    }
    line_count_ = lines.size();
    current_.reserve(line_count_);
  }

  // Returns point -> label for the least relabeling.
  std::vector<int> Minimize() {
    check_mode_ = false;
    have_best_ = false;
    Descend(0);
    return best_labels_;
  }

  // True iff some relabeling is strictly smaller than the identity labeling.
  bool HasSmallerRelabeling(std::span<const Line> lines) {
    check_mode_ = true;
    best_.clear();
    for (const Line& line : lines) {
      best_.push_back(ColexKey({line[0], line[1], line[2], line[3]}));
    }
    std::sort(best_.begin(), best_.end());
    have_best_ = true;
    found_smaller_ = false;
    Descend(0);
    return found_smaller_;
  }

 private:
  // -1: current prefix is below the incumbent; 1: above (prune); 0: tied.
  int Compare(std::uint32_t assigned) const {
    if (!have_best_) return 0;
    const std::size_t len = current_.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
    }
    // The incumbent still has a key below every key the current branch can
    // add from here on.
    if (len < best_.size() && best_[len] < (assigned << 24)) return 1;
    return 0;
  }

  void Descend(std::size_t k) {
    if (k == n_) {
      if (!check_mode_ && (!have_best_ || current_ < best_)) {
        best_ = current_;
        best_labels_ = label_of_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t p = 0; p < n_ && !found_smaller_; ++p) {
      if (label_of_[p] >= 0) continue;
      label_of_[p] = static_cast<int>(k);
      const std::size_t mark = current_.size();
      for (const auto& others : through_[p]) {
        int a = label_of_[others[0]], b = label_of_[others[1]], c = label_of_[others[2]];
        if (a >= 0 && b >= 0 && c >= 0) {
          current_.push_back(ColexKey({static_cast<std::uint32_t>(a),
                                       static_cast<std::uint32_t>(b),
                                       static_cast<std::uint32_t>(c),
                                       static_cast<std::uint32_t>(k)}));
        }
      }
      std::sort(current_.begin() + static_cast<std::ptrdiff_t>(mark), current_.end());
      int cmp = Compare(static_cast<std::uint32_t>(k + 1));
      if (cmp < 0 && check_mode_) {
        found_smaller_ = true;
      } else if (cmp <= 0) {
        Descend(k + 1);
      }
      current_.resize(mark);
      label_of_[p] = -1;
    }
  }

  std::size_t n_;
  std::size_t line_count_ = 0;
  std::vector<std::vector<std::array<Point, 3>>> through_;
  std::vector<int> label_of_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::vector<int> best_labels_;
  bool have_best_ = false;
  bool check_mode_ = false;
  bool found_smaller_ = false;
};

void CheckCap(std::size_t n, std::size_t size_cap) {
  if (n > size_cap || n > 255) {
    throw Error("n=" + std::to_string(n) + " exceeds the canonicalization cap of " +
                std::to_string(size_cap));
  }
}

// Backtracking over sorted line lists. The next line of a sorted design
// always begins with the smallest pair still below its coverage target, so
// that pair is branched on; candidate lines must also exceed the previous
// line. Supersimplicity is enforced by never covering a triple twice.
class DesignSearch {
 public:
  using Sink = std::function<void(const std::vector<Line>&)>;

  DesignSearch(std::size_t n, std::size_t lambda, Sink sink)
      : n_(n),
        target_lines_(lambda * n * (n - 1) / 12),
        capacity_(n * n, static_cast<int>(lambda)),
        quota_(n, static_cast<int>(lambda * (n - 1) / 3)),
        triple_used_(n * n * n, false),
        sink_(std::move(sink)) {}

  void SetShuffle(std::uint64_t seed) { rng_.emplace(seed); }

  // Candidate lines for the current node, in the order they will be tried.
  std::vector<Line> Candidates() {
    std::vector<Line> out;
    std::size_t a = 0, b = 0;
    if (!SmallestOpenPair(a, b)) return out;
    const Point pa = static_cast<Point>(a), pb = static_cast<Point>(b);
    if (quota_[a] <= 0 || quota_[b] <= 0) return out;
    for (std::size_t c = b + 1; c < n_; ++c) {
      if (Cap(a, c) <= 0 || Cap(b, c) <= 0 || quota_[c] <= 0) continue;
      if (triple_used_[Triple(a, b, c)]) continue;
      for (std::size_t d = c + 1; d < n_; ++d) {
        if (Cap(a, d) <= 0 || Cap(b, d) <= 0 || Cap(c, d) <= 0 || quota_[d] <= 0) continue;
        if (triple_used_[Triple(a, b, d)] || triple_used_[Triple(a, c, d)] ||
            triple_used_[Triple(b, c, d)]) {
          continue;
        }
        Line line{pa, pb, static_cast<Point>(c), static_cast<Point>(d)};
        if (!lines_.empty() && !(lines_.back() < line)) continue;
        out.push_back(line);
      }
    }
    if (rng_) std::shuffle(out.begin(), out.end(), *rng_);
    return out;
  }

  void Push(const Line& line) {
    lines_.push_back(line);
    Apply(line, -1, true);
  }

  void Pop() {
    Apply(lines_.back(), +1, false);
    lines_.pop_back();
  }

  void Search() {
    if (lines_.size() == target_lines_) {
      sink_(lines_);
      return;
    }
    for (const Line& line : Candidates()) {
      Push(line);
      Search();
      Pop();
    }
  }

 private:
  int& Cap(std::size_t a, std::size_t b) { return capacity_[a * n_ + b]; }
  std::size_t Triple(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * n_ + b) * n_ + c;
  }

  bool SmallestOpenPair(std::size_t& a, std::size_t& b) {
    for (a = 0; a < n_; ++a) {
      for (b = a + 1; b < n_; ++b) {
        if (Cap(a, b) > 0) return true;
      }
    }
    return false;
  }

  void Apply(const Line& l, int delta, bool used) {
    for (std::size_t i = 0; i < 4; ++i) {
      quota_[l[i]] += delta;
      for (std::size_t j = i + 1; j < 4; ++j) Cap(l[i], l[j]) += delta;
    }
    triple_used_[Triple(l[0], l[1], l[2])] = used;
    triple_used_[Triple(l[0], l[1], l[3])] = used;
    triple_used_[Triple(l[0], l[2], l[3])] = used;
    triple_used_[Triple(l[1], l[2], l[3])] = used;
  }

  std::size_t n_;
  std::size_t target_lines_;
  std::vector<int> capacity_;
  std::vector<int> quota_;
  std::vector<bool> triple_used_;
  std::vector<Line> lines_;
  Sink sink_;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

Permutation CanonicalLabeling(const Design& d, std::size_t size_cap) {
  CheckCap(d.n(), size_cap);
  LabelSearch search(d.n(), d.lines());
  std::vector<int> labels = search.Minimize();
  std::vector<Point> images(labels.begin(), labels.end());
  return Permutation::FromImages(std::move(images));
}

Design CanonicalForm(const Design& d, std::size_t size_cap) {
  return Relabel(d, CanonicalLabeling(d, size_cap));
}

bool IsCanonical(std::size_t n, std::span<const Line> lines) {
  LabelSearch search(n, lines);
  return !search.HasSmallerRelabeling(lines);
}

bool IsCanonical(const Design& d, std::size_t size_cap) {
  CheckCap(d.n(), size_cap);
  return IsCanonical(d.n(), d.lines());
}

std::string CanonicalHash(const Design& d) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : SerializeDesign(CanonicalForm(d))) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

bool DivisibilityHolds(std::size_t n, std::size_t lambda) {
  if (n < 4 || lambda == 0) return false;
  return (lambda * n * (n - 1)) % 12 == 0 && (lambda * (n - 1)) % 3 == 0;
}

EnumerationResult EnumerateDesigns(std::size_t n, std::size_t lambda,
                                   const EnumerationOptions& options) {
  if (!DivisibilityHolds(n, lambda)) {
    throw Error("no designs possible: 2-(" + std::to_string(n) + ",4," +
                std::to_string(lambda) + ") fails the divisibility conditions");
  }
  CheckCap(n, options.size_cap);
  const std::size_t workers = std::max<std::size_t>(1, options.workers);

  // Split on the first line; every design's first line contains {0, 1}.
  auto noop = [](const std::vector<Line>&) {};
  std::vector<Line> first_lines = DesignSearch(n, lambda, noop).Candidates();

  std::mutex sink_mutex;
  std::vector<std::vector<Line>> found;
  std::uint64_t count = 0;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      std::size_t task = next.fetch_add(1);
      if (task >= first_lines.size()) return;
      DesignSearch search(n, lambda, [&](const std::vector<Line>& lines) {
        if (!IsCanonical(n, lines)) return;
        std::lock_guard lock(sink_mutex);
        ++count;
        if (options.keep_designs || options.classify) found.push_back(lines);
      });
      if (options.shuffle_seed) search.SetShuffle(*options.shuffle_seed + task);
      search.Push(first_lines[task]);
      search.Search();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::sort(found.begin(), found.end());
  EnumerationResult result;
  result.n = n;
  result.lambda = lambda;
  result.count = count;
  for (auto& lines : found) {
    Design design(n, lambda, std::move(lines));
    if (options.classify) result.signatures.push_back(ComputeSignature(HoleStabilizer(design, 0)));
    if (options.keep_designs) result.designs.push_back(std::move(design));
  }
  return result;
}

std::uint64_t CountDesigns(std::size_t n, std::size_t lambda, std::size_t workers) {
  EnumerationOptions options;
  options.workers = workers;
  options.keep_designs = false;
  return EnumerateDesigns(n, lambda, options).count;
}

}  // namespace conway

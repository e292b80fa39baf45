#include "tripent/subsets.hpp"

#include "tripent/consistency.hpp"
#include "tripent/detail/indexed.hpp"
#include "tripent/error.hpp"

namespace tripent {

namespace {

class MaximalSubsetSearch {
 public:
  MaximalSubsetSearch(const detail::TripleIndex& index,
                      const std::function<bool(const TripleSet&)>& visit)
      : index_(index), visit_(visit), n_(index.ids().size()) {}

  void run() { descend(0); }

 private:
  bool consistent_with(std::size_t from, std::size_t extra) {
    scratch_.clear();
    for (auto i : included_) scratch_.push_back(index_.ids()[i]);
    for (std::size_t i = from; i < n_; ++i) scratch_.push_back(index_.ids()[i]);
    scratch_.push_back(index_.ids()[extra]);
    return detail::consistent_ids(scratch_, index_.leaf_count());
  }

  // Every excluded triple must still be blockable by what remains.
  bool exclusions_blockable(std::size_t next) {
    for (auto e : excluded_) {
      if (consistent_with(next, e)) return false;
    }
    return true;
  }

  bool descend(std::size_t k) {
    if (k == n_) {
      TripleSet out;
      for (auto i : included_) out.insert(index_.triples()[i]);
      return visit_(out);
    }

    scratch_.clear();
    for (auto i : included_) scratch_.push_back(index_.ids()[i]);
    scratch_.push_back(index_.ids()[k]);
    const bool can_include = detail::consistent_ids(scratch_, index_.leaf_count());

    if (can_include) {
      included_.push_back(k);
      const bool go_on = descend(k + 1);
      included_.pop_back();
      if (!go_on) return false;
    }

    excluded_.push_back(k);
    bool go_on = true;
    if (exclusions_blockable(k + 1)) go_on = descend(k + 1);
    excluded_.pop_back();
    return go_on;
  }

  const detail::TripleIndex& index_;
  const std::function<bool(const TripleSet&)>& visit_;
  std::size_t n_;
  std::vector<std::size_t> included_;
  std::vector<std::size_t> excluded_;
  std::vector<detail::IdTriple> scratch_;
};

void check_limits(const TripleSet& r, SubsetLimits limits) {
  if (r.size() > limits.max_triples) {
    throw Error(ErrorKind::SetTooLarge, std::to_string(r.size()) +
                                            " triples exceeds the subset-enumeration limit of " +
                                            std::to_string(limits.max_triples));
  }
}

}  // namespace

void for_each_maximal_consistent_subset(const TripleSet& r,
                                        const std::function<bool(const TripleSet&)>& visit,
                                        SubsetLimits limits) {
  check_limits(r, limits);
  detail::TripleIndex index(r);
  MaximalSubsetSearch(index, visit).run();
}

std::vector<TripleSet> maximal_consistent_subsets(const TripleSet& r, SubsetLimits limits) {
  std::vector<TripleSet> out;
  for_each_maximal_consistent_subset(
      r,
      [&](const TripleSet& s) {
        out.push_back(s);
        return true;
      },
      limits);
  return out;
}

EntailmentAnswer entails_inconsistent(const TripleSet& r, const RootedTriple& t,
                                      SubsetLimits limits) {
  EntailmentAnswer answer;
  for_each_maximal_consistent_subset(
      r,
      [&](const TripleSet& subset) {
        if (entails_consistent(subset, t)) {
          answer.entailed = true;
          answer.witness = subset;
          return false;
        }
        return true;
      },
      limits);
  return answer;
}

TripleSet closure_inconsistent(const TripleSet& r, SubsetLimits limits) {
  TripleSet out;
  for_each_maximal_consistent_subset(
      r,
      [&](const TripleSet& subset) {
        out = out.united(closure_consistent(subset));
        return true;
      },
      limits);
  return out;
}

}  // namespace tripent

#pragma once

// Exists-equality products from Boolean products: the t most frequent values
// of each column go through t Boolean instances, every other ("rare") value
// is matched by scanning its short occurrence list.

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omv/config.hpp"
#include "omv/oracle.hpp"
#include "omv/solver.hpp"

namespace omv {

/// Per column: the t most frequent values (ties to the smaller value, absent
/// slots when the column has fewer distinct values) and an index from every
/// other value to the ascending rows holding it.
class FrequencyTable {
 public:
  FrequencyTable(const SquareMatrix& m, std::size_t t) : t_(t) {
    const std::size_t n = m.dimension();
    frequent_.assign(n, std::vector<std::optional<Value>>(t));
    slot_.resize(n);
    rare_.resize(n);
    for (Index k = 0; k < n; ++k) {
      std::map<Value, std::vector<Index>> rows;
      for (Index i = 0; i < n; ++i) rows[m(i, k)].push_back(i);

      std::vector<std::pair<Value, std::size_t>> by_count;
      for (const auto& [value, where] : rows) by_count.emplace_back(value, where.size());
      std::stable_sort(by_count.begin(), by_count.end(),
                       [](const auto& a, const auto& b) { return a.second > b.second; });

      for (std::size_t l = 0; l < by_count.size(); ++l) {
        const Value value = by_count[l].first;
        if (l < t) {
          frequent_[k][l] = value;
          slot_[k].emplace(value.raw(), l);
        } else {
          rare_[k].emplace(value, std::move(rows[value]));
        }
      }
    }
  }

  std::size_t slices() const { return t_; }

  /// f_k^(1..t); absent slots are nullopt.
  const std::vector<std::optional<Value>>& frequent(Index k) const {
    return frequent_[k];
  }

  /// 0-based slot of `value` among the frequent values of column k.
  std::optional<std::size_t> slot_of(Index k, Value value) const {
    auto it = slot_[k].find(value.raw());
    if (it == slot_[k].end()) return std::nullopt;
    return it->second;
  }

  /// Rows (0-based, ascending) where a rare value occurs; empty if `value`
  /// is frequent or absent from the column.
  std::span<const Index> rare_rows(Index k, Value value) const {
    auto it = rare_[k].find(value);
    if (it == rare_[k].end()) return {};
    return it->second;
  }

  const std::map<Value, std::vector<Index>>& rare_index(Index k) const {
    return rare_[k];
  }

 private:
  std::size_t t_;
  std::vector<std::vector<std::optional<Value>>> frequent_;
  std::vector<std::unordered_map<Value::Rep, std::size_t>> slot_;
  std::vector<std::map<Value, std::vector<Index>>> rare_;
};

class EqualityFromBoolean final : public OnlineSolver {
 public:
  EqualityFromBoolean(SquareMatrix m, const ReductionConfig& cfg,
                      const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::exists_equality, m.dimension(), opts),
        table_(m, cfg.resolve_t(m.dimension())) {
    const std::size_t n = m.dimension();
    const std::size_t t = table_.slices();
    inner_.reserve(t);
    for (std::size_t l = 0; l < t; ++l) {
      SquareMatrix slice(n, Value(0), Domain::boolean);
      for (Index i = 0; i < n; ++i) {
        for (Index k = 0; k < n; ++k) {
          if (table_.frequent(k)[l] == m(i, k)) slice(i, k) = Value(1);
        }
      }
      inner_.push_back(inner(ProblemKind::boolean, std::move(slice),
                             mix_seed(cfg.seed, l)));
    }
  }

  std::string name() const override { return "eq<-bool"; }
  std::size_t slices() const { return table_.slices(); }
  const FrequencyTable& table() const { return table_; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    std::vector<const OnlineSolver*> out;
    for (const auto& s : inner_) out.push_back(s.get());
    return out;
  }

  bool supports_witnesses() const override {
    return std::all_of(inner_.begin(), inner_.end(),
                       [](const SolverPtr& s) { return s->supports_witnesses(); });
  }

  void track_witnesses(bool on) override {
    OnlineSolver::track_witnesses(on);
    for (auto& s : inner_) s->track_witnesses(tracking_);
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    ColumnVector out(n, Value(0), Domain::boolean);
    if (tracking_) witnesses_.assign(n, std::nullopt);

    for (std::size_t l = 0; l < inner_.size(); ++l) {
      ColumnVector sliced(n, Value(0), Domain::boolean);
      for (Index k = 0; k < n; ++k) {
        if (table_.frequent(k)[l] == v[k]) sliced[k] = Value(1);
      }
      ColumnVector hit = inner_[l]->query(sliced);
      ++counters_.inner_queries;
      for (Index i = 0; i < n; ++i) {
        if (hit[i] != Value(1)) continue;
        out[i] = Value(1);
        if (tracking_ && !witnesses_[i]) witnesses_[i] = inner_[l]->witnesses()[i];
      }
    }

    for (Index k = 0; k < n; ++k) {
      for (Index i : table_.rare_rows(k, v[k])) {
        ++counters_.scan_length_total;
        out[i] = Value(1);
        if (tracking_ && !witnesses_[i]) witnesses_[i] = k;
      }
    }
    return out;
  }

 private:
  FrequencyTable table_;
  std::vector<SolverPtr> inner_;
};

}  // namespace omv

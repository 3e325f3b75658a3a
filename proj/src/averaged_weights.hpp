#ifndef CHUNKTX_SRC_AVERAGED_WEIGHTS_HPP
#define CHUNKTX_SRC_AVERAGED_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace chunktx {

// Perceptron weights with lazy averaging (Collins-style): instead of adding
// the full vector to a running sum after every step, each cell remembers the
// step of its last change and settles the skipped additions on the next
// touch. `now` advances once per training instance.
class AveragedWeights {
 public:
  explicit AveragedWeights(std::size_t width) : width_(width) {}

  void update(const std::string& feature, std::size_t column, double delta) {
    Row& row = rows_.try_emplace(feature, Row{}).first->second;
    if (row.w.empty()) {
      row.w.assign(width_, 0.0);
      row.acc.assign(width_, 0.0);
      row.ts.assign(width_, 0);
    }
    row.acc[column] += static_cast<double>(now_ - row.ts[column]) * row.w[column];
    row.w[column] += delta;
    row.ts[column] = now_;
  }

  double score(const std::string& feature, std::size_t column) const {
    auto it = rows_.find(feature);
    return it == rows_.end() || it->second.w.empty() ? 0.0 : it->second.w[column];
  }

  const std::vector<double>* row(const std::string& feature) const {
    auto it = rows_.find(feature);
    return it == rows_.end() || it->second.w.empty() ? nullptr : &it->second.w;
  }

  void tick() { ++now_; }

  // Mean weight over steps 1..now (call once, after the last tick).
  std::unordered_map<std::string, std::vector<double>> averaged() const {
    std::unordered_map<std::string, std::vector<double>> out;
    if (now_ == 0) return out;
    const double total = static_cast<double>(now_);
    for (const auto& [feature, row] : rows_) {
      if (row.w.empty()) continue;
      std::vector<double> avg(width_, 0.0);
      bool any = false;
      for (std::size_t j = 0; j < width_; ++j) {
        double acc = row.acc[j] +
                     static_cast<double>(now_ - row.ts[j] + 1) * row.w[j];
        avg[j] = acc / total;
        if (avg[j] != 0.0) any = true;
      }
      if (any) out.emplace(feature, std::move(avg));
    }
    return out;
  }

  std::uint64_t steps() const { return now_; }

 private:
  struct Row {
    std::vector<double> w, acc;
    std::vector<std::uint64_t> ts;
  };
  std::size_t width_;
  std::uint64_t now_ = 0;
  std::unordered_map<std::string, Row> rows_;
};

// Dense variant for label-transition matrices.
class AveragedMatrix {
 public:
  AveragedMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), w_(rows * cols, 0.0), acc_(rows * cols, 0.0), ts_(rows * cols, 0) {}

  void update(std::size_t i, std::size_t j, double delta) {
    std::size_t k = i * cols_ + j;
    acc_[k] += static_cast<double>(now_ - ts_[k]) * w_[k];
    w_[k] += delta;
    ts_[k] = now_;
  }

  double score(std::size_t i, std::size_t j) const { return w_[i * cols_ + j]; }
  void tick() { ++now_; }

  std::vector<std::vector<double>> averaged() const {
    std::size_t rows = w_.size() / (cols_ ? cols_ : 1);
    std::vector<std::vector<double>> out(rows, std::vector<double>(cols_, 0.0));
    if (now_ == 0) return out;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        std::size_t k = i * cols_ + j;
        double acc = acc_[k] + static_cast<double>(now_ - ts_[k] + 1) * w_[k];
        out[i][j] = acc / static_cast<double>(now_);
      }
    return out;
  }

 private:
  std::size_t cols_;
  std::uint64_t now_ = 0;
  std::vector<double> w_, acc_;
  std::vector<std::uint64_t> ts_;
};

}  // namespace chunktx

#endif

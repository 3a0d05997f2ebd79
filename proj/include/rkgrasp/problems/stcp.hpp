#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rkgrasp/decoder.hpp"

namespace rkgrasp {

/// Set covering instance whose rows are triples of columns. A cover is a
/// set of columns meeting every row.
class StcpInstance {
 public:
  using Triple = std::array<int, 3>;

  /// rows hold 0-based column indices. When steiner is set, every pair of
  /// columns must co-occur in exactly one row. Throws std::invalid_argument.
  StcpInstance(int columns, std::vector<Triple> rows, bool steiner = false, std::string name = {});

  int columns() const { return columns_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  bool steiner() const { return steiner_; }
  const std::string& name() const { return name_; }
  const std::vector<Triple>& triples() const { return rows_; }
  /// Rows containing the column, ascending.
  std::span<const int> rows_of(int column) const {
    return {row_index_.data() + row_start_[column], row_index_.data() + row_start_[column + 1]};
  }

  /// 64-bit words per row bitset.
  int words() const { return words_; }
  /// Bitset over the rows containing the column.
  std::span<const std::uint64_t> row_mask(int column) const {
    return {masks_.data() + static_cast<std::size_t>(column) * words_, static_cast<std::size_t>(words_)};
  }

  /// Dense 0/1 incidence matrix, rows x columns.
  Eigen::MatrixXi incidence() const;

  friend bool operator==(const StcpInstance& a, const StcpInstance& b) {
    return a.columns_ == b.columns_ && a.rows_ == b.rows_ && a.steiner_ == b.steiner_;
  }

 private:
  int columns_;
  std::vector<Triple> rows_;
  bool steiner_;
  std::string name_;
  std::vector<int> row_start_;
  std::vector<int> row_index_;
  int words_ = 0;
  std::vector<std::uint64_t> masks_;
};

struct StcpCover {
  int cost = 0;
  std::vector<int> columns;  ///< used columns, in key order
};

/// Greedy cover over the columns sorted by key, followed by a pass that
/// drops every redundant column in the same order.
StcpCover decode_stcp(const RandomKeys& x, const StcpInstance& inst);

/// True when every row contains at least one of the columns.
bool is_cover(const std::vector<int>& columns, const StcpInstance& inst);

class StcpDecoder final : public Decoder {
 public:
  explicit StcpDecoder(StcpInstance inst) : inst_(std::move(inst)) {}

  int dimension() const override { return inst_.columns(); }
  double cost(const RandomKeys& x) const override { return decode_stcp(x, inst_).cost; }
  DecodedSolution decode(const RandomKeys& x) const override;
  std::string_view problem() const override { return "stcp"; }
  int natural_size() const override { return inst_.columns(); }
  const StcpInstance& instance() const { return inst_; }

 private:
  StcpInstance inst_;
};

}  // namespace rkgrasp

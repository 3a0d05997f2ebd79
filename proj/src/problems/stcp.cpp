#include "rkgrasp/problems/stcp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rkgrasp {

StcpInstance::StcpInstance(int columns, std::vector<Triple> rows, bool steiner, std::string name)
    : columns_(columns), rows_(std::move(rows)), steiner_(steiner), name_(std::move(name)) {
  if (columns_ < 1) throw std::invalid_argument("stcp: at least one column is required");
  if (rows_.empty()) throw std::invalid_argument("stcp: at least one row is required");
  std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(columns_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Triple t = rows_[r];
    for (int c : t)
      if (c < 0 || c >= columns_) throw std::invalid_argument("stcp: column index out of range in row " + std::to_string(r + 1));
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("stcp: row weight != 3 in row " + std::to_string(r + 1));
    for (int c : t) rows_of[c].push_back(static_cast<int>(r));
  }
  row_start_.push_back(0);
  for (const auto& list : rows_of) {
    row_index_.insert(row_index_.end(), list.begin(), list.end());
    row_start_.push_back(static_cast<int>(row_index_.size()));
  }
  words_ = (static_cast<int>(rows_.size()) + 63) / 64;
  masks_.assign(static_cast<std::size_t>(columns_) * words_, 0);
  for (int c = 0; c < columns_; ++c)
    for (int r : this->rows_of(c)) masks_[static_cast<std::size_t>(c) * words_ + r / 64] |= std::uint64_t{1} << (r % 64);
  if (steiner_) {
    Eigen::MatrixXi pairs = Eigen::MatrixXi::Zero(columns_, columns_);
    for (const Triple& t : rows_)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (a != b) ++pairs(t[a], t[b]);
    for (int a = 0; a < columns_; ++a)
      for (int b = a + 1; b < columns_; ++b)
        if (pairs(a, b) != 1)
          throw std::invalid_argument("stcp: columns " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                      " share " + std::to_string(pairs(a, b)) + " rows, expected 1");
  }
}

Eigen::MatrixXi StcpInstance::incidence() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(rows(), columns_);
  for (int r = 0; r < rows(); ++r)
    for (int c : rows_[r]) a(r, c) = 1;
  return a;
}

StcpCover decode_stcp(const RandomKeys& x, const StcpInstance& inst) {
  if (x.size() != inst.columns()) throw std::invalid_argument("decode_stcp: dimension mismatch");
  const std::vector<int> order = argsort(x);
  const int w = inst.words();
  // Every row has three columns, so coverage never exceeds three. The
  // layers one, two and three hold the rows covered at least that often.
  thread_local std::vector<std::uint64_t> layers;
  layers.assign(3 * static_cast<std::size_t>(w), 0);
  std::uint64_t* one = layers.data();
  std::uint64_t* two = one + w;
  std::uint64_t* three = two + w;

  std::vector<int> chosen;
  for (int c : order) {
    const std::uint64_t* m = inst.row_mask(c).data();
    bool opens = false;
    for (int i = 0; i < w && !opens; ++i) opens = (m[i] & ~one[i]) != 0;
    if (!opens) continue;
    chosen.push_back(c);
    for (int i = 0; i < w; ++i) {
      three[i] |= two[i] & m[i];
      two[i] |= one[i] & m[i];
      one[i] |= m[i];
    }
  }
  std::uint64_t missing = 0;
  for (int i = 0; i < w - 1; ++i) missing |= ~one[i];
  const int tail = inst.rows() - 64 * (w - 1);
  const std::uint64_t last = tail == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  missing |= last & ~one[w - 1];
  if (missing) throw std::runtime_error("decode_stcp: instance is not coverable");

  StcpCover out;
  for (int c : chosen) {
    const std::uint64_t* m = inst.row_mask(c).data();
    bool redundant = true;
    for (int i = 0; i < w && redundant; ++i) redundant = (m[i] & ~two[i]) == 0;
    if (!redundant) {
      out.columns.push_back(c);
      continue;
    }
    for (int i = 0; i < w; ++i) {
      const std::uint64_t keep = ~m[i];
      one[i] = (one[i] & keep) | (two[i] & m[i]);
      two[i] = (two[i] & keep) | (three[i] & m[i]);
      three[i] &= keep;
    }
  }
  out.cost = static_cast<int>(out.columns.size());
  return out;
}

bool is_cover(const std::vector<int>& columns, const StcpInstance& inst) {
  std::vector<char> chosen(inst.columns(), 0);
  for (int c : columns) chosen[c] = 1;
  return std::all_of(inst.triples().begin(), inst.triples().end(), [&](const StcpInstance::Triple& t) {
    return chosen[t[0]] || chosen[t[1]] || chosen[t[2]];
  });
}

DecodedSolution StcpDecoder::decode(const RandomKeys& x) const {
  const StcpCover cover = decode_stcp(x, inst_);
  std::vector<int> cols = cover.columns;
  std::sort(cols.begin(), cols.end());
  std::ostringstream os;
  os << "cover";
  for (int c : cols) os << ' ' << c + 1;
  return {static_cast<double>(cover.cost), os.str()};
}

}  // namespace rkgrasp

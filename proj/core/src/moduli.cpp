#include "gwcb/moduli.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwcb {

namespace {

void restricted_growth(int n, int i, int used, std::vector<int>& label,
                       std::vector<FCurve>& out) {
  const int left = n - i;
  if (used + left < 4) return;
  if (i == n) {
    std::vector<FCurve::Block> blocks(4);
    for (int p = 0; p < n; ++p) blocks[label[p]].push_back(p + 1);
    out.emplace_back(std::move(blocks));
    return;
  }
  for (int b = 0; b < std::min(used + 1, 4); ++b) {
    label[i] = b;
    restricted_growth(n, i + 1, std::max(used, b + 1), label, out);
  }
}

}  // namespace

FCurve::FCurve(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.size() != 4) throw std::invalid_argument("an F-curve has exactly four blocks");
  std::vector<int> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("F-curve blocks must be nonempty");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("F-curve blocks must partition {1..n}");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
  n_ = static_cast<int>(all.size());
}

std::string to_string(const FCurve& curve) {
  std::string out = "{";
  for (std::size_t j = 0; j < curve.blocks().size(); ++j) {
    if (j) out += '|';
    const auto& block = curve.block(j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out + "}";
}

FCurve parse_fcurve(std::string_view text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw std::invalid_argument("expected an F-curve like {1,2|3|4|5}");
  }
  std::vector<FCurve::Block> blocks(1);
  std::string number;
  auto flush = [&] {
    if (number.empty()) throw std::invalid_argument("empty entry in F-curve");
    blocks.back().push_back(std::stoi(number));
    number.clear();
  };
  for (char c : text.substr(open + 1, close - open - 1)) {
    if (c == ' ') continue;
    if (c >= '0' && c <= '9') {
      number += c;
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      blocks.emplace_back();
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in F-curve");
    }
  }
  flush();
  return FCurve(std::move(blocks));
}

std::vector<FCurve> enumerate_fcurves(int n) {
  if (n < 4) throw std::invalid_argument("F-curves need n >= 4");
  std::vector<FCurve> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  restricted_growth(n, 0, 0, label, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool DivisorVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.second == 0; });
}

DivisorVector divisor_vector(const std::function<Integer(const FCurve&)>& eval, int n) {
  DivisorVector out;
  out.n = n;
  for (auto& curve : enumerate_fcurves(n)) {
    Integer value = eval(curve);
    out.values.emplace_back(std::move(curve), std::move(value));
  }
  return out;
}

}  // namespace gwcb

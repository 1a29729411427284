#include "giambelli/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace giambelli {

Partition Partition::from_parts(const std::vector<int>& parts) {
  Partition p;
  int prev = -1;
  for (int x : parts) {
    if (x < 0) throw std::invalid_argument("negative part");
    if (prev >= 0 && x > prev) throw std::invalid_argument("parts not nonincreasing");
    prev = x;
    if (x > 0) p.parts_.push_back(x);
  }
  // Zeros may only appear as a trailing run.
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] == 0 && parts[i + 1] > 0)
      throw std::invalid_argument("parts not nonincreasing");
  return p;
}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::transpose() const {
  Partition t;
  if (parts_.empty()) return t;
  t.parts_.resize(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j) {
    int cnt = 0;
    for (int row : parts_)
      if (row > j) ++cnt;
    t.parts_[j] = cnt;
  }
  return t;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

FrobeniusCoords Partition::frobenius() const {
  FrobeniusCoords fc;
  Partition tr = transpose();
  for (int i = 1; i <= length(); ++i) {
    if (part(i) - i < 0) break;
    fc.p.push_back(part(i) - i);
    fc.q.push_back(tr.part(i) - i);
  }
  return fc;
}

Partition Partition::from_frobenius(const FrobeniusCoords& fc) {
  if (fc.p.size() != fc.q.size())
    throw std::invalid_argument("frobenius: |p| != |q|");
  const int d = fc.d();
  for (int i = 0; i + 1 < d; ++i) {
    if (fc.p[i] <= fc.p[i + 1] || fc.q[i] <= fc.q[i + 1])
      throw std::invalid_argument("frobenius: coordinates not strictly decreasing");
  }
  for (int i = 0; i < d; ++i)
    if (fc.p[i] < 0 || fc.q[i] < 0)
      throw std::invalid_argument("frobenius: negative coordinate");
  // Rebuild rows: lambda_i = p_i + i for i <= d, then the rows below the
  // diagonal come from the column data.
  std::vector<int> rows;
  for (int i = 0; i < d; ++i) rows.push_back(fc.p[i] + i + 1);
  // lambda'_j = q_j + j for j <= d; row i > d has length = #{j : lambda'_j >= i}.
  int max_extra = d > 0 ? fc.q[0] : 0;
  for (int i = d + 1; i <= d + max_extra; ++i) {
    int cnt = 0;
    for (int j = 0; j < d; ++j)
      if (fc.q[j] + j + 1 >= i) ++cnt;
    if (cnt == 0) break;
    rows.push_back(cnt);
  }
  return from_parts(rows);
}

Partition Partition::hook(int p, int q) {
  std::vector<int> parts{p + 1};
  for (int i = 0; i < q; ++i) parts.push_back(1);
  return from_parts(parts);
}

std::vector<int> Partition::contents() const {
  std::vector<int> cs;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) cs.push_back(j - i);
  return cs;
}

Integer Partition::dim_hook() const {
  const long n = size();
  Integer num = factorial(n);
  Partition tr = transpose();
  Integer hooks = 1;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j)
      hooks *= (part(i) - j) + (tr.part(j) - i) + 1;
  Integer d;
  mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  return d;
}

std::vector<std::pair<Partition, int>> Partition::successors() const {
  std::vector<std::pair<Partition, int>> out;
  const int len = length();
  for (int i = 1; i <= len + 1; ++i) {
    int row = part(i);
    if (i == 1 || row < part(i - 1)) {
      std::vector<int> np = parts_;
      if (i <= len)
        np[i - 1] += 1;
      else
        np.push_back(1);
      out.emplace_back(from_parts(np), (row + 1) - i);
    }
  }
  return out;
}

std::vector<std::pair<Partition, int>> Partition::predecessors() const {
  std::vector<std::pair<Partition, int>> out;
  for (int i = 1; i <= length(); ++i) {
    if (part(i) > part(i + 1)) {
      std::vector<int> np = parts_;
      np[i - 1] -= 1;
      out.emplace_back(from_parts(np), part(i) - i);
    }
  }
  return out;
}

std::vector<int> Partition::lattice_config() const {
  FrobeniusCoords fc = frobenius();
  std::vector<int> pts;
  for (int i = fc.d() - 1; i >= 0; --i) pts.push_back(-(2 * fc.q[i] + 1));
  for (int i = fc.d() - 1; i >= 0; --i) pts.push_back(2 * fc.p[i] + 1);
  std::sort(pts.begin(), pts.end());
  return pts;
}

Partition Partition::from_lattice_config(const std::vector<int>& twice_points) {
  std::vector<int> pos, neg;
  for (int t : twice_points) {
    if (t % 2 == 0) throw std::invalid_argument("lattice point not in Z'");
    if (t > 0)
      pos.push_back(t);
    else
      neg.push_back(-t);
  }
  if (pos.size() != neg.size())
    throw std::invalid_argument("configuration not balanced");
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  FrobeniusCoords fc;
  for (size_t i = 0; i < pos.size(); ++i) {
    fc.p.push_back((pos[i] - 1) / 2);
    fc.q.push_back((neg[i] - 1) / 2);
  }
  return from_frobenius(fc);
}

namespace {

void enumerate_rec(int n, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition::from_parts(cur));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    enumerate_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  return out;
}

Integer dim_skew(const Partition& mu, const Partition& lambda) {
  if (!lambda.contains(mu)) return 0;
  if (lambda == mu) return 1;
  static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>
      memo;
  auto key = std::make_pair(mu.parts(), lambda.parts());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Integer total = 0;
  for (const auto& [prev, c] : lambda.predecessors()) {
    (void)c;
    total += dim_skew(mu, prev);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace giambelli

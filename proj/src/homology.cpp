#include "looptor/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace looptor {

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense to_dense(const IntMatrix& m) {
  Dense a(m.rows, std::vector<mpz_class>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = static_cast<long>(m.at(r, c));
  return a;
}


SmithResult dense_smith(Dense a, int rows, int cols) {
  SmithResult res;
  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        mpz_class q = a[r][t] / a[t][t];
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        mpz_class q = a[t][c] / a[t][t];
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (int r = t + 1; r < rows && clean; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (int k = t; k < cols; ++k) a[t][k] += a[r][k];
            clean = false;
            break;
          }
    }
    res.factors.push_back(abs(a[t][t]));
    ++t;
  }
  res.rank = static_cast<int>(res.factors.size());
  return res;
}

// Sparse rows; every unit entry is eliminated before the dense pass.
struct SparseRows {
  std::vector<std::map<int, Coefficient>> rows;
  std::vector<std::set<int>> col_rows;
};

// Returns the number of unit pivots removed; the remainder is left in `a`.
int eliminate_units(SparseRows& a) {
  int pivots = 0;
  std::vector<bool> row_alive(a.rows.size(), true);
  while (true) {
    // Markowitz choice among unit entries.
    long best = -1;
    int pr = -1, pc = -1;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      if (!row_alive[r]) continue;
      for (const auto& [c, v] : a.rows[r]) {
        if (v != 1 && v != -1) continue;
        long cost = static_cast<long>(a.rows[r].size() - 1) * static_cast<long>(a.col_rows[c].size() - 1);
        if (best < 0 || cost < best) {
          best = cost;
          pr = static_cast<int>(r);
          pc = c;
        }
      }
      if (best == 0) break;
    }
    if (pr < 0) return pivots;
    Coefficient u = a.rows[pr].at(pc);
    std::vector<int> others(a.col_rows[pc].begin(), a.col_rows[pc].end());
    for (int r : others) {
      if (r == pr) continue;
      Coefficient f = checked_mul(a.rows[r].at(pc), u);
      for (const auto& [c, v] : a.rows[pr]) {
        Coefficient nv = checked_add(a.rows[r].count(c) ? a.rows[r][c] : 0, -checked_mul(f, v));
        if (nv == 0) {
          a.rows[r].erase(c);
          a.col_rows[c].erase(r);
        } else {
          a.rows[r][c] = nv;
          a.col_rows[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : a.rows[pr]) a.col_rows[c].erase(pr);
    a.rows[pr].clear();
    row_alive[pr] = false;
    ++pivots;
  }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SparseRows sp;
  sp.rows.resize(m.rows);
  sp.col_rows.resize(m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (Coefficient v = m.at(r, c)) {
        sp.rows[r][c] = v;
        sp.col_rows[c].insert(r);
      }
  int units = 0;
  try {
    units = eliminate_units(sp);
  } catch (const std::overflow_error&) {
    return dense_smith(to_dense(m), m.rows, m.cols);
  }
  // Dense pass on the rows and columns that are still populated.
  std::vector<int> live_rows, live_cols;
  std::map<int, int> col_index;
  for (int r = 0; r < m.rows; ++r)
    if (!sp.rows[r].empty()) live_rows.push_back(r);
  for (int c = 0; c < m.cols; ++c)
    if (!sp.col_rows[c].empty()) {
      col_index[c] = static_cast<int>(live_cols.size());
      live_cols.push_back(c);
    }
  Dense a(live_rows.size(), std::vector<mpz_class>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : sp.rows[live_rows[i]]) a[i][col_index[c]] = static_cast<long>(v);
  SmithResult rest = dense_smith(std::move(a), static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
  SmithResult res;
  res.factors.assign(units, mpz_class(1));
  res.factors.insert(res.factors.end(), rest.factors.begin(), rest.factors.end());
  res.rank = static_cast<int>(res.factors.size());
  return res;
}

int rank_mod_p(const IntMatrix& m, int p) {
  std::vector<std::vector<long>> a(m.rows, std::vector<long>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;
  auto inv = [p](long x) {
    long r = 1, e = p - 2, b = x;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long iv = inv(a[rank][c]);
    for (int k = c; k < m.cols; ++k) a[rank][k] = a[rank][k] * iv % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || !a[r][c]) continue;
      long f = a[r][c];
      for (int k = c; k < m.cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (betti == 1) s = "Z";
  if (betti > 1) s = "Z^" + std::to_string(betti);
  for (auto t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
  return s.empty() ? "0" : s;
}

std::vector<std::int64_t> canonical_torsion(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> powers;  // prime -> prime powers
  for (std::int64_t o : orders) {
    if (o <= 1) continue;
    std::int64_t n = o;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t count = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.rbegin(), qs.rend());
    count = std::max(count, qs.size());
  }
  std::vector<std::int64_t> factors(count, 1);
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[count - 1 - i] *= qs[i];
  return factors;
}

void ChainComplex::check() const {
  if (boundary.size() != ranks.size()) throw BoundaryError("complex has the wrong number of boundary maps");
  for (int k = 1; k <= top(); ++k) {
    const IntMatrix& d = boundary[k];
    if (d.rows != ranks[k - 1] || d.cols != ranks[k])
      throw BoundaryError("boundary d_" + std::to_string(k) + " has the wrong shape");
  }
  for (int k = 2; k <= top(); ++k) {
    const IntMatrix& a = boundary[k - 1];
    const IntMatrix& b = boundary[k];
    std::vector<Coefficient> row(b.cols);
    for (int r = 0; r < a.rows; ++r) {
      std::fill(row.begin(), row.end(), 0);
      for (int m = 0; m < a.cols; ++m) {
        Coefficient x = a.at(r, m);
        if (x == 0) continue;
        for (int c = 0; c < b.cols; ++c)
          if (Coefficient y = b.at(m, c)) row[c] = checked_add(row[c], checked_mul(x, y));
      }
      for (Coefficient v : row)
        if (v != 0) throw BoundaryError("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
    }
  }
}

namespace {

HomologyGroup assemble(const ChainComplex& C, int k, const SmithResult* in, const SmithResult* out) {
  HomologyGroup h;
  int rank_out = 0;
  if (out) {
    rank_out = out->rank;
    for (const mpz_class& f : out->factors)
      if (f > 1) {
        if (!f.fits_slong_p()) throw std::overflow_error("torsion coefficient exceeds 64 bits");
        h.torsion.push_back(f.get_si());
      }
  }
  h.betti = C.ranks[k] - (in ? in->rank : 0) - rank_out;
  return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& C, int k) {
  if (k < 0 || k > C.top()) throw std::out_of_range("homology degree outside the complex");
  std::optional<SmithResult> in, out;
  if (k >= 1) in = smith_normal_form(C.boundary[k]);
  if (k + 1 <= C.top()) out = smith_normal_form(C.boundary[k + 1]);
  return assemble(C, k, in ? &*in : nullptr, out ? &*out : nullptr);
}

std::vector<HomologyGroup> homology_table(const ChainComplex& C, int max_k) {
  if (max_k > C.top()) throw std::out_of_range("homology degree outside the complex");
  int last = std::min(max_k + 1, C.top());
  std::vector<SmithResult> snf(last + 1);
  parallel_for(last, [&](int i) { snf[i + 1] = smith_normal_form(C.boundary[i + 1]); });
  std::vector<HomologyGroup> out(max_k + 1);
  for (int k = 0; k <= max_k; ++k)
    out[k] = assemble(C, k, k >= 1 ? &snf[k] : nullptr, k + 1 <= last ? &snf[k + 1] : nullptr);
  return out;
}

ChainComplex simplicial_chains(const SimplicialSet& X, int top) {
  std::vector<std::vector<SimplexRef>> bases;
  for (int k = 0; k <= top; ++k) bases.push_back(X.nondegenerate(k));
  std::function<LinearCombination<SimplexRef>(const SimplexRef&)> d = [&](const SimplexRef& x) {
    LinearCombination<SimplexRef> out;
    for (int i = 0; x.dim > 0 && i <= x.dim; ++i) {
      SimplexRef f = X.face(x, i);
      if (!f.is_degenerate()) out.add(f, i % 2 ? -1 : 1);
    }
    return out;
  };
  return make_complex(bases, d);
}

std::vector<HomologyGroup> kunneth(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b,
                                   int max_k) {
  std::vector<HomologyGroup> out(max_k + 1);
  std::vector<std::vector<std::int64_t>> tors(max_k + 1);
  auto group = [](const std::vector<HomologyGroup>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : HomologyGroup{}; };
  for (int i = 0; i <= max_k; ++i)
    for (int j = 0; i + j <= max_k; ++j) {
      HomologyGroup x = group(a, i), y = group(b, j);
      int k = i + j;
      out[k].betti += x.betti * y.betti;
      for (auto t : y.torsion) tors[k].insert(tors[k].end(), x.betti, t);
      for (auto s : x.torsion) tors[k].insert(tors[k].end(), y.betti, s);
      for (auto s : x.torsion)
        for (auto t : y.torsion) {
          tors[k].push_back(std::gcd(s, t));
          if (k + 1 <= max_k) tors[k + 1].push_back(std::gcd(s, t));
        }
    }
  for (int k = 0; k <= max_k; ++k) out[k].torsion = canonical_torsion(tors[k]);
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("LOOPTOR_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace looptor

#include "b1f/cubic.hpp"

#include <algorithm>

#include "construct_util.hpp"

namespace b1f::cubic {

namespace {

using detail::FactorBuilder;

// [head..., 4^count]
CycleType with_fours(std::vector<int> head, int count) {
  head.insert(head.end(), static_cast<std::size_t>(count), 4);
  return CycleType(std::move(head));
}

void check_one_n(int n) {
  if (n == 7) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::ProvenNonexistent,
                         "Circ(14,{1,7}) has no 3-B1F");
  }
  if (n <= 5) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::TooFewTypes,
                         "Circ(2n,{1,n}) with n <= 5 has fewer than three possible pair types");
  }
}

void check_two_n(int n) {
  if (n >= 2 && n % 2 == 0) {
    throw ParameterError(ErrorCode::DisconnectedParameter, RangeReason::Degenerate,
                         "Circ(" + std::to_string(2 * n) + ",{2," + std::to_string(n) + "}) is disconnected (even n)");
  }
  if (n == 7) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::ProvenNonexistent,
                         "Circ(14,{2,7}) has no 3-B1F");
  }
  if (n <= 5) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::TooFewTypes,
                         "Circ(2n,{2,n}) with n <= 5 has fewer than three possible pair types");
  }
}

}  // namespace

OneFactorisation construct_one_n(int n) {
  check_one_n(n);
  const CirculantGraph g(2 * n, {1, n});
  const long long m = 2LL * n;
  FactorBuilder f1(g), f2(g), f3(g);

  if (n % 2 == 0) {
    for (long long x = 0; x <= m - 2; x += 2) f1.add(x, x + 1);

    for (long long x = 1; x <= m - 3; x += 2) {
      if (x != n - 1) f2.add(x, x + 1);
    }
    f2.add(0, n).add(n - 1, m - 1);

    f3.add(n - 1, n).add(m - 1, m);
    for (long long x = 1; x <= n - 2; ++x) f3.add(x, x + n);
  } else {
    for (long long x = 0; x <= n - 3; x += 2) f1.add(x, x + 1);
    for (long long x = n; x <= m - 3; x += 2) f1.add(x, x + 1);  // n odd, so x odd
    f1.add(n - 1, m - 1);

    for (long long x = 1; x <= n - 2; x += 2) {
      if (x != n - 4) f2.add(x, x + 1);
    }
    for (long long x = n + 1; x <= m - 2; x += 2) {
      if (x != m - 4) f2.add(x, x + 1);
    }
    for (long long x : {0LL, n - 4LL, n - 3LL}) f2.add(x, x + n);

    for (long long x : {n - 4LL, n - 1LL, m - 4, m - 1}) f3.add(x, x + 1);
    for (long long x = 1; x <= n - 2; ++x) {
      if (x != n - 4 && x != n - 3) f3.add(x, x + n);
    }
  }
  return detail::assemble(g, {f1.take(), f2.take(), f3.take()});
}

OneFactorisation construct_two_n(int n) {
  check_two_n(n);
  const CirculantGraph g(2 * n, {2, n});
  const long long m = 2LL * n;
  FactorBuilder f1(g), f2(g), f3(g);
  auto mod4 = [](long long x) { return ((x % 4) + 4) % 4; };

  if (n % 4 == 1) {
    for (long long x = 0; x <= n - 4; ++x) {
      if (mod4(x) == 0 || mod4(x) == 1) f1.add(x, x + 2);
    }
    for (long long x = n; x <= m - 4; ++x) {
      if (mod4(x) == 1 || mod4(x) == 2) f1.add(x, x + 2);
    }
    f1.add(n - 1, m - 1);

    for (long long x : {n - 7LL, n - 3LL, m - 7, m - 3}) f2.add(x, x + 2);
    for (long long x = 0; x <= n - 8; ++x) f2.add(x, x + n);
    for (long long x : {n - 6LL, n - 4LL, n - 2LL}) f2.add(x, x + n);

    for (long long x = 0; x <= n - 10; ++x) {
      if (mod4(x) == 2 || mod4(x) == 3) f3.add(x, x + 2);
    }
    for (long long x = n; x <= m - 10; ++x) {
      if (mod4(x) == 0 || mod4(x) == 3) f3.add(x, x + 2);
    }
    for (long long x : {n - 6LL, n - 2LL, n - 1LL, m - 6, m - 2, m - 1}) f3.add(x, x + 2);
    for (long long x : {n - 7LL, n - 5LL, n - 3LL}) f3.add(x, x + n);
  } else {
    for (long long x = 0; x <= n - 6; ++x) {
      if (mod4(x) == 0 || mod4(x) == 1) f1.add(x, x + 2);
    }
    for (long long x = n; x <= m - 6; ++x) {
      if (mod4(x) == 0 || mod4(x) == 3) f1.add(x, x + 2);
    }
    for (long long x : {n - 3LL, m - 3}) f1.add(x, x + 2);
    f1.add(n - 2, m - 2);

    for (long long x : {n - 8LL, n - 4LL, m - 8, m - 4}) f2.add(x, x + 2);
    for (long long x = 0; x <= n - 9; ++x) f2.add(x, x + n);
    for (long long x : {n - 7LL, n - 5LL, n - 3LL, n - 1LL}) f2.add(x, x + n);

    for (long long x = 0; x <= n - 12; ++x) {
      if (mod4(x) == 2 || mod4(x) == 3) f3.add(x, x + 2);
    }
    for (long long x = n; x <= m - 12; ++x) {
      if (mod4(x) == 1 || mod4(x) == 2) f3.add(x, x + 2);
    }
    for (long long x : {n - 9LL, n - 5LL, n - 2LL, n - 1LL, m - 9, m - 5, m - 2, m - 1}) f3.add(x, x + 2);
    for (long long x : {n - 8LL, n - 6LL, n - 4LL}) f3.add(x, x + n);
  }
  return detail::assemble(g, {f1.take(), f2.take(), f3.take()});
}

OneFactorisation construct(const CubicFamily& family) {
  return family.kind == Family::OneN ? construct_one_n(family.n) : construct_two_n(family.n);
}

std::vector<CycleType> expected_types_cubic(const CubicFamily& family) {
  const int n = family.n;
  const int m = 2 * n;
  std::vector<CycleType> out;
  if (family.kind == Family::OneN) {
    check_one_n(n);
    if (n % 2 == 0) {
      out = {CycleType({m}), with_fours({}, m / 4), with_fours({8}, (m - 8) / 4)};
    } else {
      out = {CycleType({m - 6, 6}), with_fours({6}, (m - 6) / 4), with_fours({8, 6}, (m - 14) / 4)};
    }
  } else {
    check_two_n(n);
    out = {with_fours({10}, (m - 10) / 4), CycleType({m - 4, 4}), with_fours({6}, (m - 6) / 4)};
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace b1f::cubic

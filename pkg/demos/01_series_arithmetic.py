"""Exact truncated series: the odd/even kernels and Laurent inverses."""

from gwhurwitz import MultiSeries, pochhammer_series, s_series, sigma_series

print("The odd exponential kernel and its even normalization:")
sigma = sigma_series("x", 10)
print("  sigma(x) =", sigma)
print("  S(x)     =", s_series("x", 9))

print("\nLaurent inversion is exact and tracks the guaranteed order:")
inv = sigma.inverse()
print("  1/sigma(x) =", inv)
print("  product    =", (inv * sigma))

print("\nPochhammer factors, rising and falling branches:")
print("  k=+3:", pochhammer_series(3, "w", 8))
print("  k=-2:", pochhammer_series(-2, "w", 6))

print("\nPrecision is a contract: asking beyond the window raises an error.")
try:
    sigma.coefficient(10)
except Exception as exc:
    print("  ", type(exc).__name__, "-", exc)

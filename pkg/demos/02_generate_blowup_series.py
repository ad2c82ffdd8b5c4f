"""Generate the universal blow-up pair and print it in table layout.

The even series B and odd series S are pinned down by the bivariate product
identity B(u+v)B(u-v) = B^2(u)B^2(v) - S^2(u)S^2(v) together with the seeds
B = 1 + O(t^4) and S = t - x t^3/6 + O(t^5).  Generation re-verifies the
identity and the embedded golden table before returning, so what prints
below is certified data.

Run with:  python demos/02_generate_blowup_series.py
"""
from blowup_series import build_series_set, render_xpoly

ORDER = 16
series = build_series_set(ORDER)

print(f"series set at order {ORDER}, content hash {series.content_hash[:16]}...\n")

rows = [
    ("B", series.b, "even blow-up series"),
    ("S", series.s, "odd blow-up series"),
    ("B2", series.b2, "B^2 (even-case universal series)"),
    ("S2", series.s2, "S^2 (even-case inserted series)"),
    ("WS0", series.ws0, "odd-case series, integral formula"),
    ("WS1", series.ws1, "odd-case inserted series, integral formula"),
]

for name, s, description in rows:
    print(f"{name}(t)  --  {description}")
    for n, _ in s.terms():
        coeff = s.coeff(n, normalized=True)
        slot = f"t^{n}/{n}!"
        print(f"   {slot:<10} {render_xpoly(coeff)}")
    print()

# The half sum / half difference of the two exponential ODE solutions agree
# with the plain squares -- the central finite-order certification.
print("b0 == B^2 at this order:", series.b0 == series.b2)
print("btau == S^2 at this order:", series.btau == series.s2)

"""Each family's published APN test against brute-force uniformity.

Runs the root-scan / cube tests and the general derivative-kernel
criterion next to the full difference-table computation, on small grids
where everything is exhaustive.
"""

from apnspectra import (
    Butterfly,
    Taniguchi,
    ZhouPott,
    build_function,
    carlet11_is_apn,
    carlet_general_is_apn,
    differential_spectrum,
    field,
    taniguchi_is_apn,
    zhoupott_apn_predicate,
)
from apnspectra.families import Carlet11, taniguchi_as_general

print("== taniguchi, m=3, k=1: root scan vs uniformity vs kernel criterion")
F = field(3)
agree = total = apn = 0
for a in F.elements():
    for b in F.nonzero_elements():
        p = Taniguchi(3, 1, a, b)
        scan = taniguchi_is_apn(3, 1, a, b)
        brute = differential_spectrum(build_function(p)).is_apn
        kernels = carlet_general_is_apn(taniguchi_as_general(p))
        total += 1
        agree += scan == brute == kernels
        apn += brute
print(f"   {total} instances, {agree} in full agreement, {apn} APN")

print("== carlet11, m=3: degenerate triples are never APN")
a, t = 0x3, 0x5
apow = F.frobenius(a, 1)
triple = Carlet11(3, 0, 1, F.mul(F.mul(apow, a), t), t,
                  F.mul(a, t), F.mul(apow, t))
print(f"   triple {triple}")
print(f"   root scan says APN: "
      f"{carlet11_is_apn(3, 0, 1, triple.s, triple.t, triple.u, triple.v)}")
print(f"   uniformity: "
      f"{differential_spectrum(build_function(triple)).uniformity}")

print("== zhoupott, m=4: APN iff j even and alpha a non-cube")
F4 = field(4)
for j in (1, 2):
    for alpha in list(F4.nonzero_elements())[:6]:
        pred = zhoupott_apn_predicate(4, 1, j, alpha)
        brute = differential_spectrum(
            build_function(ZhouPott(4, 1, j, alpha))).is_apn
        mark = "cube" if F4.is_cube(alpha) else "non-cube"
        print(f"   j={j} alpha=0x{F4.to_hex(alpha)} ({mark:8s}) "
              f"predicate={pred!s:5s} uniformity-2={brute}")

print("== butterfly, m=3: the known APN pocket Tr(alpha)=0, beta=alpha^3+alpha")
F = field(3)
for alpha in F.nonzero_elements():
    if F.trace(alpha):
        continue
    beta = F.pow(alpha, 3) ^ alpha
    u = differential_spectrum(
        build_function(Butterfly(3, alpha, beta))).uniformity
    print(f"   alpha=0x{F.to_hex(alpha)} beta=0x{F.to_hex(beta)} "
          f"uniformity={u}")

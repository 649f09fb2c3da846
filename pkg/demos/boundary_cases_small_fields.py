"""Why GF(4) is special: the point-count arguments turn vacuous.

The necessity half of the Zhou-Pott APN test rests on two enumerative
facts that need 2^(m/2) > 2(2^k - 1): nonzero values of t -> t^(2^k) + t
hit every cube coset under x -> x^3, and the excluded-multiplier set is
the whole field when j is odd.  Both fail at m = 2, and there the simple
predicate and the exact criterion genuinely part ways.
"""

from apnspectra import ZhouPott, build_function, differential_spectrum, field
from apnspectra.families import zhoupott_as_general, carlet_general_is_apn
from apnspectra.verifier import (
    excluded_multiplier_set,
    verify_cube_curve,
    verify_s_full,
    verify_zhoupott,
)

F = field(2)
print("== the excluded-multiplier set at m=2, k=1, j=1")
s = excluded_multiplier_set(F, 1, 1)
print(f"   set = {{{', '.join('0x' + F.to_hex(v) for v in sorted(s))}}} "
      f"(the whole field would have 4 elements)")

print("== so odd-j instances can still be APN at m=2:")
for alpha in F.nonzero_elements():
    p = ZhouPott(2, 1, 1, alpha)
    brute = differential_spectrum(build_function(p)).is_apn
    exact = carlet_general_is_apn(zhoupott_as_general(p))
    print(f"   alpha=0x{F.to_hex(alpha)} cube={F.is_cube(alpha)!s:5s} "
          f"uniformity-2={brute!s:5s} exact-criterion={exact}")

print("== sweeps record these as boundary outcomes, not refutations")
for finding in (verify_cube_curve([2, 4]), verify_s_full([2, 4]),
                verify_zhoupott([2])):
    print(f"   {finding.claim}: status={finding.status}, "
          f"boundary records={len(finding.boundary)}")

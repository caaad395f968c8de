"""The headline vanishing results, one instance per theorem branch.

Run:  python3 demos/vanishing_tour.py
"""

from wittenq.gci import GCIData, condition_report
from wittenq.genera import (dim4_closed_form, mod2_witten, wc_genus,
                            witten_genus)

Q_ORDER = 16


def show(series):
    entries = [(k, c) for k, c in enumerate(getattr(series, "coeffs",
                                                    getattr(series, "bits",
                                                            [])))]
    nz = [(k, c) for k, c in entries if c]
    return "0 (identically)" if not nz else " + ".join(
        f"{c}*q^{k}" for k, c in nz)


def main():
    print("== non-vanishing control: CP^2 (not spin) ==")
    g = GCIData([2], [], q_order=Q_ORDER)
    rep = witten_genus(g)
    print(f"  W(CP^2) = {show(rep.coeffs)}")
    print(f"  integral: {rep.integral} (fractional q^0 detects non-spin)")
    print(f"  matches the closed form p1 * (-1/24 + ...):"
          f" {dim4_closed_form(g) == rep.coeffs}")

    print("\n== string vanishing: V(1,2) in CP^4 ==")
    g = GCIData([4], [[1], [2]], q_order=Q_ORDER)
    print(f"  string: {condition_report(g).string}")
    print(f"  W = {show(witten_genus(g).coeffs)}")

    print("\n== string^c vanishing, dim 4k: V(1,1) in CP^4, C = [1] ==")
    g = GCIData([4], [[1], [1]], C=[1], q_order=Q_ORDER)
    print(f"  string^c (coefficient 3): {condition_report(g).stringc}")
    print(f"  W_c = {show(wc_genus(g).coeffs)}")
    print(f"  dim-4 closed form agrees:"
          f" {dim4_closed_form(g, use_c=True).is_zero()}")

    print("\n== string^c vanishing, dim 4k+2: V(2) in CP^4, C = [1] ==")
    g = GCIData([4], [[2]], C=[1], q_order=Q_ORDER)
    print(f"  string^c (coefficient 1): {condition_report(g).stringc}")
    print(f"  W_c = {show(wc_genus(g).coeffs)}")

    print("\n== mod 2 vanishing: V(2,2) in CP^7 (real dim 10) ==")
    g = GCIData([7], [[2], [2]], q_order=Q_ORDER)
    rep = mod2_witten(g)
    print(f"  rational precursor integral: {rep.precursor.is_integral()}")
    print(f"  phi = {show(rep.coeffs)} in Z2[[q]]")


if __name__ == "__main__":
    main()

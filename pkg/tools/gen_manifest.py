"""Regenerate src/volkenborn/catalog/manifest.json from the table below.

Run from the repository root: python3 tools/gen_manifest.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "volkenborn" / "catalog" / "manifest.json"


def E(kind, reason, corrected=None):
    d = {"kind": kind, "reason": reason}
    if corrected:
        d["corrected"] = corrected
    return d


# (group, id, paper_eq, anchor, check, options)
ROWS = [
    # factorial and binomial identities, checked coefficient-wise in x (and y)
    ("FAC", "RO", "(Ro)", "x x_(n) = x_(n+1) + n x_(n)", "ro", {}),
    ("FAC", "IDD1", "(IDD-1)", "x_(n+1) = x sum_k (-1)^(n-k) n!/k! x_(k)", "idd1", {}),
    ("FAC", "AB6", "(ab6)", "(x+1)_(n+1) = x x_(n) + x_(n)", "ab6", {}),
    ("FAC", "AB6A", "(ab6a)", "(x+1)_(n) = x_(n) + n x_(n-1), n >= 1", "ab6a", {"n_min": 1}),
    ("FAC", "LF1C", "(LamdaFun-1c)", "x_(m) x_(n) = sum_k C(m,k) C(n,k) k! x_(m+n-k)", "lf1c", {}),
    ("FAC", "CV", "(cv), (ai0a2)", "Chu-Vandermonde identity: sum_k binom(x,k) binom(y,n-k) = binom(x+y,n)", "chu_vandermonde", {}),
    ("FAC", "V1A", "(v1-A)", "binom(x+1,n) = binom(x,n) + binom(x,n-1)", "v1a", {}),
    ("FAC", "GG1", "(Gg1)", "x binom(x-2,n-1) = sum_{k=1}^n (-1)^(k-n) k binom(x,k)", "gould_x_binom", {}),
    ("FAC", "GG2", "(Gg2)", "binom(n-x,n) = sum_k (-1)^(k-n) binom(x,k)", "gg2_printed",
     {"erratum": E("bulk", "the sign factor must be (-1)^k; the printed (-1)^(k-n) is wrong for odd n", "gg2_corrected")}),
    ("FAC", "ID7", "(Id-7)", "binom(mx,n) = sum_k binom(x,k) sum_j (-1)^j C(k,j) binom(mk-mj,n)", "id7", {}),
    ("FAC", "ID5", "(Id-5)", "binom(x,n)^r = sum_{k<=nr} binom(x,k) sum_j (-1)^j C(k,j) binom(k-j,n)^r", "id5", {}),
    ("FAC", "ID6", "(Id-6)", "x binom(x-2,n-1) + x(x-1) binom(n-3,n-2) = sum_k (-1)^k k^2 binom(x,k), n >= 2", "id6_printed",
     {"n_min": 2, "erratum": E("bulk", "the second binomial must be binom(x-3,n-2) and the left side needs a factor (-1)^n", "id6_corrected")}),
    ("FAC", "ID1A", "(Id-1a)", "binom(x+n,n) = sum_k binom(x,k) sum_j (-1)^j C(k,j) C(k-j+n,n)", "id1a", {}),
    ("FAC", "ID2B", "(Id-2b)", "binom(x+n,n) = sum_k x^k sum_{j<=n} C(n,j) S1(j,k)/j!", "id2b", {}),
    ("FAC", "BIAA", "(1BIaa)", "binom(x+n+1/2,n) = (2n+1) C(2n,n) sum_k C(n,k) binom(x,k) 2^(2k-2n)/((2k+1) C(2k,k))", "biaa", {}),
    ("FAC", "BI1B3", "(1BIb3)", "x binom(x-2,n-1) = sum_{k=1}^n (-1)^(k-n) k binom(x,k)", "gould_x_binom", {}),
    ("FAC", "BI1B4", "(1BIb4)", "(-1)^n binom(n-x,n) = sum_{k=1}^n (-1)^k binom(x,k)", "bi1b4_printed",
     {"erratum": E("bulk", "the left side must be binom(n-x,n) - 1 with no sign factor", "bi1b4_corrected")}),
    ("FAC", "SCHLOMILCH", "Schlomilch formula for S1(n,k)", "S1(n,k) = sum_j (-1)^j binom(n+j-1,k-1) binom(2n-k,n-k-j) S2(n-k+j,j)", "schlomilch",
     {"n_min": 1, "erratum": E("declared", "checked verbatim as printed; at n = 0 the form depends on the convention for binom(-1,-1)")}),
    ("FAC", "OSGOOD", "(LamdaFun-1v)", "(xy)_(k) = sum_{l,m} C^(k)_{l,m} x_(l) y_(m)", "osgood_printed",
     {"erratum": E("bulk", "with the extra sign (-1)^(k-j) on the unsigned numbers the stated constants are not reproduced; the signed S1(k,j) gives them, and the sum needs l, m from 0", "osgood_corrected")}),
    ("FAC", "LAH_DEF", "(Lah), (LahLAH)", "(-x)_(n) = sum_{k=1}^n L(n,k) x_(k); x^(n) = sum_{k=1}^n |L(n,k)| x_(k); n >= 1", "lah", {"n_min": 1}),
    ("FAC", "CF_RT", "(acnum1t), (acnum1T)", "x^[n] = sum_k t(n,k) x^k and x^n = sum_k T(n,k) x^[k] are inverse", "cf_round_trip", {}),
    ("FAC", "BUTZER_EVEN", "(aBuT)", "x^2 prod_{k=1}^{n-1} (x^2 - k^2) = x^[2n]", "butzer_even", {}),
    ("FAC", "BUTZER_ODD", "(aBuT1)", "x prod_{k=1}^{n} (x^2 - (2k-1)^2/4) = x^[2n+1]", "butzer_odd", {}),
    ("FAC", "BUTZER_REC", "(ABuTFAL.)", "x^2 x^[n-2] = x^[n] + ((n-2)/2)^2 x^[n-2]", "butzer_rec", {}),
    ("FAC", "DELTA_T", "central difference formula", "delta^j x^n at 0 = j! T(n,j)", "delta_t", {}),
    # generating functions and value lists
    ("GF", "APB_VALUES", "Apostol-Bernoulli number list", "B_n(lambda) values from t/(lambda e^t - 1)", "apb_values", {}),
    ("GF", "APB_POLY_VALUES", "Apostol-Bernoulli polynomial list", "B_n(x;lambda) = sum_j C(n,j) B_j(lambda) x^(n-j)", "apb_poly_printed",
     {"erratum": E("bulk", "the x coefficient of B_2(x;lambda) must be 2/(lambda-1), not 1/(lambda-1)", "apb_poly_corrected")}),
    ("GF", "APB_INITIAL", "Apostol-Bernoulli initial condition", "lambda B_1(1;lambda) = 1 + B_1(lambda)", "apb_initial", {}),
    ("GF", "APE_VALUES", "Apostol-Euler number list", "E_n(lambda) values from 2/(lambda e^t + 1)", "ape_values", {}),
    ("GF", "REL_APBE", "(RelationApostolEnBn)", "E_n(lambda) = -2 B_{n+1}(-lambda)/(n+1)", "rel_apostol_eb", {}),
    ("GF", "FROB_VALUES", "Frobenius-Euler number list", "H_n(u) values from (1-u)/(e^t - u)", "frob_values", {}),
    ("GF", "FROB_EULER", "Frobenius-Euler special case", "E_n = H_n(-1)", "frob_euler", {}),
    ("GF", "APB_FROB", "Apostol-Bernoulli and Frobenius-Euler relation", "B_n(lambda) = n H_{n-1}(1/lambda)/(lambda-1)", "apb_frob", {}),
    ("GF", "BE_LISTS", "Bernoulli and Euler number lists", "printed values of B_n, E_n and E*_n", "bernoulli_euler_lists", {}),
    ("GF", "CAUCHY_B2", "(Be-1t), (LamdaFun-1p)", "b_n(0) = int_0^1 x_(n) dx agrees with t/log(1+t)", "cauchy_b2", {}),
    ("GF", "FUBINI_W", "(1aSs1d)", "w-torsion Fubini polynomials: 2/(1 - y^w (e^t-1)^w) coefficients", "fubini_w", {}),
    ("GF", "CHANGHEE_STIRLING", "(ChEuler)", "E_n = sum_m S2(n,m) Ch_m", "changhee_stirling", {}),
    ("GF", "PETERS_SPECIAL", "Peters numbers at lambda = mu = 1", "2 s_n(0;1,1) = Ch_n", "peters_special", {}),
    ("GF", "PETERS_THETA", "Peters numbers and Y_{n,2}", "s_n(0;1,1) = ((theta-1)^(n+1)/(2 theta^(2n))) Y_{n,2}(theta)", "peters_theta", {}),
    ("GF", "AY1B", "(ay1B)", "x_(n) = sum_v sum_j C(mu,j) C(n,v) (lambda j)_(v) s_{n-v}(x;lambda,mu)", "ay1b", {}),
    ("GF", "AY1C", "(ay1C)", "x_(n) = sum_v sum_k C(n,v) lambda^k B(k,mu) S1(v,k) s_{n-v}(x;lambda,mu)", "ay1c", {}),
    ("GF", "A1A3", "(A1), (A3)", "Y_{n,2}(x;lambda) from the generating function equals the falling-factorial sum", "a1_a3", {}),
    # Volkenborn integral formulas
    ("VOLK", "C7", "(C7)", "int binom(x,n) dmu_1 = (-1)^n/(n+1)", "c7", {}),
    ("VOLK", "AK1", "(ak1), (Y1), (aii3)", "int x_(n) dmu_1 = (-1)^n n!/(n+1) = D_n = sum_l S1(n,l) B_l", "ak1", {}),
    ("VOLK", "C0", "(C0)", "int binom(x+n-1,n) dmu_1 = sum_{m=1}^n (-1)^m C(n-1,m-1)/(m+1), n >= 1", "c0", {"n_min": 1}),
    ("VOLK", "BI1", "(1BI)", "int (x+n-1)_(n) dmu_1 = n! sum_m (-1)^m C(n-1,n-m)/(m+1)", "bi1", {}),
    ("VOLK", "L1", "(L1)", "int x x_(n) dmu_1 = (-1)^(n+1) n!/(n^2+3n+2)", "l1", {}),
    ("VOLK", "L1A", "(L1-A)", "int x x_(n) dmu_1 = sum_{k=1}^n S1(n,k-1) B_k + B_{n+1}", "l1a", {}),
    ("VOLK", "LL1A", "(LL-1a)", "int x x^(n) dmu_1 = sum_{k=1}^n (-1)^(k+1) C(n-1,k-1) n!/(k^2+3k+2), n >= 1", "ll1a", {"n_min": 1}),
    ("VOLK", "LL1B", "(LL-1c), (LL-1b)", "int x x^(n) dmu_1 = sum_{k=1}^n C(n,k) B_{k+1}", "ll1b_printed",
     {"erratum": E("boundary", "stated for all n >= 0 but at n = 0 the empty sum gives 0 while x x^(0) = x", "ll1b_positive_n")}),
    ("VOLK", "XRATIO", "integral of x_(n+1)/x", "int x_(n+1)/x dmu_1 = sum_k (-1)^n n_(n-k) k!/(k+1)", "xratio", {}),
    ("VOLK", "COMBSUM", "combinatorial sum", "sum_k n_(n-k) k!/(k^2+3k+2) = (n+1)!/(n+2)", "combsum", {}),
    ("VOLK", "X1N1", "integral of (x+1)_(n+1)", "int (x+1)_(n+1) dmu_1 = (-1)^n n!/(n+2)", "x1n1", {}),
    ("VOLK", "AI0A3", "(ai0a3)", "int binom(x+m,n) dmu_1 = sum_k (-1)^k C(m,n-k)/(k+1)", "ai0a3", {}),
    ("VOLK", "LF1A", "(LamdaFun-1a)", "double integral of binom(x+y,n) = sum_k (-1)^n/((k+1)(n-k+1))", "lf1a", {}),
    ("VOLK", "LF1B", "(LamdaFun-1b)", "double integral of binom(x+y,n) = (1/n!) sum_k sum_j C(k,j) S1(n,k) B_j B_{k-j}", "lf1b", {}),
    ("VOLK", "V1A_INT", "(v1a)", "int binom(x+1,n) dmu_1 = (-1)^(n+1)/(n^2+n), n >= 1", "v1a_int", {"n_min": 1}),
    ("VOLK", "X1N", "integral of (x+1)_(n)", "int (x+1)_(n) dmu_1 = (-1)^(n+1) n!/(n^2+n), n >= 1", "x1n", {"n_min": 1}),
    ("VOLK", "DELTA_INT", "integral of the difference of x_(n)", "int Delta x_(n) dmu_1 = (-1)^(n+1) (n-1)!, n >= 1", "delta_int", {"n_min": 1}),
    ("VOLK", "NEGX", "integral of (-x)_(n)", "int (-x)_(n) dmu_1 = sum_{k=1}^n (-1)^(k+n) C(n-1,k-1) n!/(k+1)", "negx", {}),
    ("VOLK", "V1B", "(v1b)", "int binom(x+1,n+1) dmu_1 = (-1)^n/(n^2+3n+2)", "v1b", {}),
    ("VOLK", "LF1S", "(LamdaFun-1s)", "double integral of (xy)_(k) = sum_{l,m=1}^k D_l D_m C^(k)_{l,m}", "lf1s_printed",
     {"erratum": E("bulk", "inherits the sign problem of the C^(k)_{l,m} definition and drops l = m = 0, so k = 0 fails too", "lf1s_corrected")}),
    ("VOLK", "LF1U", "(LamdaFun-1u)", "double integral of (xy)_(k) = sum_m S1(k,m) B_m^2", "lf1u", {}),
    ("VOLK", "GG1_INT", "integral of x binom(x-2,n-1)", "int x binom(x-2,n-1) dmu_1 = (-1)^n sum_{k=1}^n k/(k+1)", "gg1_int", {}),
    ("VOLK", "HARM_INT", "(AHn)", "int binom(n-x,n) dmu_1 = (-1)^n H_n", "harm_int_printed",
     {"erratum": E("bulk", "follows from the sign error in the binom(n-x,n) expansion; the integral is H_n with no sign", "harm_int_corrected")}),
    ("VOLK", "ID7_INT", "integral of binom(mx,n)", "int binom(mx,n) dmu_1 = sum_k (-1)^k/(k+1) sum_j (-1)^j C(k,j) binom(mk-mj,n)", "id7_int", {}),
    ("VOLK", "IR2", "(IR-2)", "int binom(x,n)^r dmu_1 = sum_{k<=nr} (-1)^k/(k+1) sum_j (-1)^j C(k,j) binom(k-j,n)^r", "ir2", {}),
    ("VOLK", "ID6_INT", "integral of the Id-6 left side", "int {x binom(x-2,n-1) + x(x-1) binom(n-3,n-2)} dmu_1 = (-1)^n sum_k k^2/(k+1)", "id6_int_printed",
     {"n_min": 2, "erratum": E("bulk", "inherits the binom(n-3,n-2) misprint; with binom(x-3,n-2) the stated value holds", "id6_int_corrected")}),
    ("VOLK", "ID1_ID2", "(Id-1), (Id-2)", "int binom(x+n,n) dmu_1 by the Mahler and the Stirling expansions", "id1_id2", {}),
    ("VOLK", "BIAA_INT", "integral of binom(x+n+1/2,n)", "C(2n,n) sum_k (-1)^k C(n,k) 2^(2k-2n)(2n+1)/((k+1)(2k+1)C(2k,k))", "biaa_int", {}),
    ("VOLK", "AS1B", "(aS1B)", "int x^m x_(n) dmu_1 = sum_k S1(n,k) B_{k+m}", "as1b", {}),
    ("VOLK", "LF1H", "(LamdaFun-1h)", "int x_(n) x_(m) dmu_1 = sum_j sum_l S1(n,j) S1(m,l) B_{j+l}", "lf1h", {}),
    ("VOLK", "LAHV", "(1LaHv)", "int x_(n) x_(m) dmu_1 = sum_k (-1)^(m+n-k) C(m,k) C(n,k) k! (m+n-k)!/(m+n-k+1)", "lahv", {}),
    ("VOLK", "LF1I", "(LamdaFun-1i)", "int x_(n) x_(m) dmu_1 = sum_k C(m,k) C(n,k) k! sum_l S1(m+n-k,l) B_l", "lf1i", {}),
    ("VOLK", "BIAB", "(1BIab)", "int x_(m) (x-m)_(n) dmu_1 = (-1)^(m+n) (m+n)!/(m+n+1), m, n >= 1", "biab", {"m_min": 1}),
    ("VOLK", "CFT_INT", "(acnum1Tt)", "int x^[n] dmu_1 = sum_k t(n,k) B_k", "cft_int", {}),
    ("VOLK", "CF2_INT", "integral of x^2 x^[n-2]", "int x^2 x^[n-2] dmu_1 = sum_k t(n,k) B_k + ((n-2)/2)^2 sum_k t(n-2,k) B_k, n >= 2", "cf2_int", {"n_min": 2}),
    ("VOLK", "CF_EVEN_INT", "integral of x^2 prod (x^2 - k^2)", "int x^2 prod_{k<n} (x^2-k^2) dmu_1 = sum_{k=0}^{2n} t(2n,k) B_{2k}", "cf_even_int_printed",
     {"n_min": 1, "erratum": E("bulk", "the sum must run over t(2n,2k) B_{2k}, k = 0..n", "cf_even_int_corrected")}),
    ("VOLK", "CF_ODD_INT", "integral of the odd central product", "int x prod_{k=1}^n (x^2 - (2k-1)^2/4) dmu_1 = -(1/2) d/dx x^[2n+1] at 0", "cf_odd_int", {}),
    ("VOLK", "XVBINR_V", "integral of x^v binom(x,n)^r", "sum_{k<=nr} sum_j (-1)^j C(k,j) binom(k-j,n)^r sum_l S1(k,l) B_{v+l}/k!", "xvbinr_v", {}),
    ("VOLK", "BERN_SUM_V", "(A.Berns.8b), (A.Berns.9), (A.Berns.9a)", "sum_k (-1)^(k-n) int B_k^n dmu_1 = sum_j C(n,j) (-2)^(n-j) B_{n-j}", "bern_sum_v_printed",
     {"erratum": E("bulk", "the theorem statement carries (-1)^(k-n); the numbered equations use (-1)^k, which is the correct sign", "bern_sum_v_corrected")}),
    ("VOLK", "PETERS_V", "(1aS1), (1aS2), (1aS3), (1aS5)", "int s_n(x;lambda,mu) dmu_1 in Daehee, factorial and Stirling forms", "peters_v_printed",
     {"n_cap": 8, "erratum": E("bulk", "the factorial form must use (n-v)!/(n-v+1), not (n-v+1)!/(n-v+1)", "peters_v_corrected")}),
    ("VOLK", "HARMPROD_V", "(AF5s)", "int prod_{j=1}^k (1+jx) dmu_1 = sum_n k! binom(H_k,k-n) B_n, harmonic binomial coefficient", "harmprod_v", {"n_min": 1}),
    # fermionic integral formulas
    ("FERM", "EST3", "(est-3)", "int binom(x,n) dmu_-1 = (-1)^n 2^(-n)", "est3", {}),
    ("FERM", "AK2", "(ak2), (y1), (yy1)", "int x_(n) dmu_-1 = (-1)^n n!/2^n = Ch_n", "ak2", {}),
    ("FERM", "CA1", "(Ca-1)", "int binom(x+n-1,n) dmu_-1 = sum_{m=1}^n (-1)^m C(n-1,m-1) 2^(-m), n >= 1", "ca1", {"n_min": 1}),
    ("FERM", "FI1", "(1FI)", "int (x+n-1)_(n) dmu_-1 = n! sum_m (-1)^m C(n-1,n-m) 2^(-m)", "fi1", {}),
    ("FERM", "AB7", "(ab7)", "int x x_(n) dmu_-1 = (-1)^n (n-1) n!/2^(n+1), n >= 1", "ab7", {"n_min": 1}),
    ("FERM", "AB7A", "(ab7a)", "int x x^(n) dmu_-1 = sum_{k=1}^n (-1)^k C(n-1,k-1) (k-1) n!/2^(k+1)", "ab7a_printed",
     {"erratum": E("boundary", "stated for n >= 0 but at n = 0 the empty sum gives 0 while the integral of x is -1/2", "ab7a_positive_n")}),
    ("FERM", "V1B_F", "(v1-B)", "int (x+1)_(n) dmu_-1 = (-1)^(n+1) n!/2^n", "v1b_f_printed",
     {"erratum": E("boundary", "stated for n >= 0 but at n = 0 the integral is 1, not -1", "v1b_f_positive_n")}),
    ("FERM", "XRATIO_F", "fermionic integral of x_(n+1)/x", "int x_(n+1)/x dmu_-1 = sum_k (-1)^n n_(n-k) k!/2^k", "xratio_f", {}),
    ("FERM", "LF1Y", "(LamdaFun-1y)", "double integral of (xy)_(k) = sum_{l,m=1}^k (-1)^(l+m) 2^(-l-m) l! m! C^(k)_{l,m}", "lf1y_printed",
     {"erratum": E("bulk", "inherits the sign problem of C^(k)_{l,m} and drops l = m = 0", "lf1y_corrected")}),
    ("FERM", "LF1Z", "(LamdaFun-1z)", "double integral of (xy)_(k) = sum_m S1(k,m) E_m^2", "lf1z", {}),
    ("FERM", "ID6_F", "fermionic integral of the Id-6 left side", "int {x binom(x-2,n-1) + x(x-1) binom(n-3,n-2)} dmu_-1 = (-1)^n sum_k k^2/2^k", "id6_f_printed",
     {"n_min": 2, "erratum": E("bulk", "inherits the binom(n-3,n-2) misprint; with binom(x-3,n-2) the stated value holds", "id6_f_corrected")}),
    ("FERM", "ID3_ID4", "(Id-3), (Id-4)", "int binom(x+n,n) dmu_-1 by the Mahler and the Stirling expansions", "id3_id4", {}),
    ("FERM", "ID7_F", "fermionic integral of binom(mx,n)", "sum_k (-1)^k 2^(-k) sum_j (-1)^j C(k,j) binom(mk-mj,n)", "id7_f", {}),
    ("FERM", "IR1", "(IR-1)", "int binom(x,n)^r dmu_-1 = sum_{k<=nr} (-1)^k 2^(-k) sum_j (-1)^j C(k,j) binom(k-j,n)^r", "ir1", {}),
    ("FERM", "HARM_F", "fermionic integral of binom(n-x,n)", "int binom(n-x,n) dmu_-1 = (-1)^n sum_{k=1}^n 2^(-k)", "harm_f_printed",
     {"erratum": E("bulk", "the integral is sum_{k=0}^n 2^(-k): no sign factor and the k = 0 term is present", "harm_f_corrected")}),
    ("FERM", "BIAA_F", "fermionic integral of binom(x+n+1/2,n)", "(2n+1) C(2n,n) sum_k (-1)^k C(n,k) 2^(k-2n)/((2k+1) C(2k,k))", "biaa_f", {}),
    ("FERM", "BERNSTEIN_F", "(A.Berns.1), (A.Berns.3), (A.Berns.4)", "int (1-x)^n dmu_-1 = 2 + E_n and the Bernstein basis integrals", "bernstein_f_printed",
     {"erratum": E("boundary", "at n = 0 the integral of (1-x)^0 is 1, not 2 + E_0 = 3; in general it is 2 - (-1)^n E_n", "bernstein_f_positive_n")}),
    ("FERM", "AS11A", "(aS11a)", "int x^m x_(n) dmu_-1 = sum_k S1(n,k) E_{k+m}", "as11a", {}),
    ("FERM", "CFT_F", "(acnum1Ttt)", "int x^[n] dmu_-1 = sum_k t(n,k) E_k", "cft_f", {}),
    ("FERM", "CF2_F", "fermionic integral of x^2 x^[n-2]", "sum_k t(n,k) E_k + ((n-2)/2)^2 sum_k t(n-2,k) E_k, n >= 2", "cf2_f", {"n_min": 2}),
    ("FERM", "CF_EVEN_F", "fermionic integral of x^2 prod (x^2 - k^2)", "int x^2 prod_{k<n} (x^2-k^2) dmu_-1 = sum_{k=0}^{2n} t(2n,k) E_{2k}", "cf_even_f", {"n_min": 1}),
    ("FERM", "BIAC", "(1BIac)", "int x_(m) (x-m)_(n) dmu_-1 = (-1)^(m+n) (m+n)!/2^(m+n) = Ch_{m+n}", "biac", {}),
    ("FERM", "LAH_F", "(1LaH)", "int x_(n) x_(m) dmu_-1 = sum_k (-1)^(m+n-k) C(m,k) C(n,k) k! (m+n-k)!/2^(m+n-k)", "lah_f", {}),
    ("FERM", "XVBINR_F", "fermionic integral of x^v binom(x,n)^r", "sum_{k<=nr} sum_j (-1)^j C(k,j) binom(k-j,n)^r sum_l S1(k,l) E_{v+l}/k!", "xvbinr_f", {}),
    ("FERM", "BERN_SUM_F", "(A.Berns.5), (A.Berns.6), (A.Berns.7), (A.Berns.8a)", "sum_k (-1)^k int B_k^n dmu_-1 = sum_j C(n,j) (-2)^(n-j) E_{n-j}", "bern_sum_f", {}),
    ("FERM", "PETERS_F", "(AF1s), (AF2), (AF3s), (AF4s), (1aSs1), (1aSs1a)", "int s_n(x;lambda,mu) dmu_-1 in Changhee and factorial forms and the inverse sums", "peters_f", {"n_cap": 8}),
    ("FERM", "HARMPROD_F", "fermionic integral of prod (1+jx)", "int prod_{j=1}^k (1+jx) dmu_-1 = sum_n k! binom(H_k,k-n) E_n", "harmprod_f", {"n_min": 1}),
    # identities
    ("IDENT", "AF6B", "(AF6b), (AF7c)", "sum_j C(n,j) B_{j+l}/(j+l) = sum_{k=1}^l (-1)^(l-k) C(l-1,l-k) (B_{n+k}(1) - B_0)/(n+k)", "af6b", {}),
    ("IDENT", "AF6B_COR", "(AF6b) at l = 1", "sum_j C(n,j) B_{j+1}/(j+1) = (B_{n+1}(1) - B_0)/(n+1)", "af6b_corollary", {}),
    ("IDENT", "AF8E", "(Af8e)", "sum_j C(n,j) E_{j+l}/(j+l) = sum_{k=1}^l (-1)^(l-k) C(l-1,l-k) (E_{n+k}(1) - E_0)/(n+k)", "af8e", {}),
    ("IDENT", "AF8E_COR", "(Af8e) at l = 1", "sum_j C(n,j) E_{j+1}/(j+1) = (E_{n+1}(1) - E_0)/(n+1)", "af8e_corollary", {}),
    ("IDENT", "CF_TB", "(acnum1TB)", "B_n = sum_k sum_j T(n,k) t(j,k) B_j", "cf_tb_printed",
     {"erratum": E("bulk", "the inner factor must be t(k,j); t(j,k) vanishes off the diagonal for j <= k", "cf_tb_corrected")}),
    ("IDENT", "CF_TE", "(acnum1TtE)", "E_n = sum_k sum_j T(n,k) t(j,k) E_j", "cf_te_printed",
     {"erratum": E("bulk", "the inner factor must be t(k,j)", "cf_te_corrected")}),
    ("IDENT", "EULER_BERNSTEIN_REL", "Euler numbers from Bernstein integrals", "E_n = sum_j (-2)^(n-j) E_{n-j} - sum_{k>=1} (-1)^k C(n,k) sum_j (-1)^(n-k-j) C(n-k,j) E_{n-j} - 2", "euler_bernstein_rel_printed",
     {"erratum": E("bulk", "the first sum needs the factor C(n,j), and the relation only holds for n >= 1", "euler_bernstein_rel_corrected")}),
    ("IDENT", "BERNSTEIN_ZERO_SUM", "Bernstein zero sum", "sum_j C(n,j) (-2)^(n-j) (E_{n-j} - sum_m S2(n-j,m) Ch_m) = 0", "bernstein_zero_sum", {}),
    ("IDENT", "STIRLING_BERN_DOUBLE", "Stirling double sum", "sum C(n,j) (-1)^(n+m-j) 2^(n-j) S2(n-j,m) m!/(m+1) = sum C(n,j) (-2)^(n-j) S2(n-j,m) S1(m,l) B_l", "stirling_bern_double", {}),
    ("IDENT", "DAEHEE_PETERS", "Daehee numbers through Peters numbers", "D_n = sum_v sum_k C(n,v) lambda^k B(k,mu) S1(v,k) sum_m C(n-v,m) s_m sum_l S1(n-v-m,l) B_l", "daehee_peters", {"n_cap": 7}),
    ("IDENT", "PETERS_FACT", "two inverse Peters sums equal to (-1)^n n!/(n+1)", "sum_v sum_j C(mu,j) C(n,v) (lambda j)_(v) int s_{n-v}(x) dmu_1 written out", "peters_fact_printed",
     {"n_cap": 7, "erratum": E("bulk", "one form repeats the s_m sum and the factorial form needs (n-v-l)! in place of (n-v)!", "peters_fact_corrected")}),
    ("IDENT", "CHANGHEE_PETERS", "(yy3) and corollary", "Ch_n = sum_v sum_k C(n,v) lambda^k B(k,mu) S1(v,k) sum_m C(n-v,m) s_m Ch_{n-v-m}", "changhee_peters", {"n_cap": 7}),
    ("IDENT", "CHANGHEE_PETERS_INV", "(yy2) and corollary", "Ch_n = sum_v sum_j C(mu,j) C(n,v) (lambda j)_(v) sum_l (-1)^(n-v-l) C(n-v,l) s_l/2^(n-v-l)", "changhee_peters_inverse_printed",
     {"n_cap": 7, "erratum": E("bulk", "the inner sum needs the factor (n-v-l)!", "changhee_peters_inverse_corrected")}),
    ("IDENT", "CHANGHEE_Y2", "(aii3Yc), (aii3Y1c)", "sum_j C(n,j) lambda^(n-j) Y_{j,2}(lambda) Ch_{n-j} = sum_j (-1)^n j! (n-j)! C(n,j) lambda^(n+j)/(2^n (lambda-1)^(j+1))", "changhee_y2", {}),
    ("IDENT", "DAEHEE_Y2", "(aii3Y), (aii3Y1)", "sum_j C(n,j) lambda^(n-j) Y_{j,2}(lambda) D_{n-j} = 2 sum (-1)^j j! C(n,j) lambda^(n+j) S1(n-j,l) B_l/(2 lambda - 2)^(j+1)", "daehee_y2", {}),
    # sequences
    ("SEQ", "YB_VALUES", "(Ad-1) value list", "Y(5,B) = B_10 - 30 B_8 + 273 B_6 - 870 B_4 + 576 B_2 and the other listed rows", "yb_values_printed",
     {"erratum": E("bulk", "the B_4 coefficient of Y(5,B) is t(10,4) = -820, not -870", "yb_values_corrected")}),
    ("SEQ", "YE_VALUES", "(Ad-2) value list", "Y(5,E) = E_10 - 30 E_8 + 273 E_6 - 870 E_4 + 576 E_2 and the other listed rows", "ye_values_printed",
     {"erratum": E("bulk", "the E_4 coefficient of Y(5,E) is -820, not -870 (the value is unaffected since E_4 = 0)", "ye_values_corrected")}),
    ("SEQ", "YB_CF", "(aABUT)", "Y(n,B) = sum_{k=1}^n t(2n,2k) B_{2k}", "yb_cf_printed",
     {"erratum": E("boundary", "stated for n >= 0 but Y(0,B) = 1 while the sum from k = 1 is empty", "yb_cf_positive_n")}),
    ("SEQ", "YE_ZERO", "(Ad-2) theorem", "Y(n,E) = sum_{k=1}^{2n} t(2n,2k) E_{2k} = 0, n >= 1", "ye_zero", {"n_min": 1}),
    ("SEQ", "B2N_REC", "(NN1)", "B_{2n} = sum_k T(2n,2k) Y(k,B)", "b2n_rec", {}),
    ("SEQ", "E2N_REC", "(acnum)", "E_{2n} = sum_k T(2n,2k) Y(k,E)", "e2n_rec", {}),
    ("SEQ", "YB_STIRLAH", "Y(n,B) through Stirling and Lah numbers", "Y(n,B) = sum_j sum_{k=1}^n sum_m S1(n,j) S1(k,m) B_{j+m} |L(n,k)|", "yb_stirlah_printed",
     {"erratum": E("boundary", "stated for n >= 0 but the k-sum from 1 misses the n = 0 term", "yb_stirlah_corrected")}),
    ("SEQ", "YE_STIRLAH", "Y(n,E) through Stirling and Lah numbers", "Y(n,E) = sum_j sum_{k=1}^n sum_m S1(n,j) S1(k,m) E_{j+m} |L(n,k)|", "ye_stirlah_printed",
     {"erratum": E("boundary", "stated for n >= 0 but the k-sum from 1 misses the n = 0 term", "ye_stirlah_corrected")}),
    ("SEQ", "XNXM_V", "Volkenborn integral of x_(n) x^(m)", "sum_{k=1}^m sum_j (-1)^(k+n-j) C(m,j) C(k,j) j! (n+k-j)! |L(m,k)|/(m+k-j+1)", "xnxm_v_printed",
     {"erratum": E("bulk", "C(m,j) and m+k-j+1 must be C(n,j) and n+k-j+1, and m = 0 needs the k = 0 term", "xnxm_v_corrected")}),
    ("SEQ", "XNXM_F", "fermionic integral of x_(n) x^(m)", "sum_{k=1}^m sum_j (-1)^(n+k-j) C(n,j) C(k,j) j! (n+k-j)! |L(m,k)|/2^(n+k-j)", "xnxm_f_printed",
     {"erratum": E("boundary", "stated for m >= 0 but m = 0 needs the k = 0 term", "xnxm_f_corrected")}),
    ("SEQ", "UNIT_T", "unit-group integral with the 1/m factor", "int over Z_p^* of x^m dmu_1 = (1 - p^(m-1)) B_m/m, m = j + n(p-1)", "unit_t_printed",
     {"erratum": E("declared", "the integral of x^m over the units is (1 - p^(m-1)) B_m; the variant with the extra 1/m is recorded, not asserted", "unit_t_corrected")}),
]


def main() -> None:
    entries = []
    for group, ident, eq, anchor, chk, opts in ROWS:
        d = {"id": f"{group}.{ident}", "group": group, "paper_eq": eq, "anchor": anchor, "check": chk}
        d.update(opts)
        entries.append(d)
    OUT.write_text(json.dumps({"entries": entries}, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {OUT}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# Copyright 2026 The rank2 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy/scipy reference values frozen into the C++ tests.

Run: python3 tests/oracles/frozen_values.py
Nothing here shares code with the library; concurrence is the fidelity-type
pair formula evaluated with scipy's sqrtm and a direct anti-linear sandwich,
entanglement and capacity use brute-force numerical search.
"""
import numpy as np
from scipy.linalg import sqrtm
from scipy.optimize import minimize

FLIP = np.array([[0, 1], [-1, 0]], dtype=complex)


def bloch_state(r):
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.diag([1, -1]).astype(complex)
    return 0.5 * (np.eye(2) + r[0] * sx + r[1] * sy + r[2] * sz)


def apply(kraus, x):
    return sum(k @ x @ k.conj().T for k in kraus)


def vartheta(a, b):
    # Anti-linear A^* F B has matrix A^dagger F conj(B); take the antisymmetrized pair.
    m = a.conj().T @ FLIP @ b.conj()
    n = b.conj().T @ FLIP @ a.conj()
    return 0.5 * (m - n)


def pair(x1, x2):
    s = sqrtm(x1)
    lam = np.sqrt(np.clip(np.linalg.eigvalsh(0.5 * (s @ x2 @ s + (s @ x2 @ s).conj().T)), 0, None))[::-1]
    return max(0.0, lam[0] - lam[1:].sum())


def concurrence(kraus, x):
    v = vartheta(*kraus)
    partner = v @ x.conj() @ v.conj()
    return 2 * pair(x, partner)


def eta(y):
    return 0.0 if y <= 0 else -y * np.log2(y)


def ent(kraus, x):
    t = np.trace(apply(kraus, x)).real
    c = concurrence(kraus, x)
    yp = 0.5 * (t + np.sqrt(max(0.0, t * t - c * c)))
    ym = t - yp
    return eta(yp) + eta(ym) - eta(t)


def out_entropy(kraus, x):
    return sum(eta(l) for l in np.clip(np.linalg.eigvalsh(apply(kraus, x)), 0, None))


def chi(kraus, r):
    r = np.asarray(r)
    n = np.linalg.norm(r)
    if n > 1:
        r = r / n
    x = bloch_state(r)
    return out_entropy(kraus, x) - ent(kraus, x)


def capacity(kraus):
    best = None
    rng = np.random.default_rng(0)
    for _ in range(40):
        r0 = rng.uniform(-0.6, 0.6, 3)
        res = minimize(lambda r: -chi(kraus, r), r0, method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 20000})
        if best is None or res.fun < best.fun:
            best = res
    return -best.fun


def wootters(rho):
    yy = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(rho @ yy @ rho.conj() @ yy).real)[::-1], 0, None))
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def canonical(a00, a11, b01, b10):
    return [np.diag([a00, a11]).astype(complex), np.array([[0, b01], [b10, 0]], dtype=complex)]


def main():
    np.set_printoptions(precision=17)
    gen = canonical(0.8, 0.6 + 0.2j, 0.5, 0.3 - 0.4j)
    x = bloch_state([0.3, -0.2, 0.4])
    print("general canonical C(omega) =", repr(concurrence(gen, x)))
    xh = np.array([[0.7, 0.1 - 0.2j], [0.1 + 0.2j, 0.5]])  # PSD, trace 1.2
    print("general canonical C(X, trace 1.2) =", repr(concurrence(gen, xh)))

    tp = canonical(0.8, 0.6, 0.8j, 0.6)
    print("tp canonical E(omega) =", repr(ent(tp, x)))
    print("tp canonical C(omega) =", repr(concurrence(tp, x)))
    print("tp canonical capacity =", repr(capacity(tp)))

    amp = canonical(1.0, np.sqrt(0.7), np.sqrt(0.3), 0.0)
    print("amplitude damping 0.3 capacity =", repr(capacity(amp)))

    rho = np.array([[0.4, 0.1, 0.0, 0.2j], [0.1, 0.2, 0.05, 0.0], [0.0, 0.05, 0.1, 0.0],
                    [-0.2j, 0.0, 0.0, 0.3]], dtype=complex)
    print("two-qubit min eig =", repr(np.linalg.eigvalsh(rho).min()))
    print("two-qubit Wootters =", repr(wootters(rho)))
    for q in (0.1, 0.3):
        s = np.sqrt
        a = s(1 - q) * np.hstack([np.eye(2), np.eye(2)])
        b = s(q) * np.hstack([np.eye(2), -np.eye(2)])
        print(f"tr_2,{q} C =", repr(concurrence([a, b], rho)))


if __name__ == "__main__":
    main()

"""JIT-compiled inner loops: adaptive/fixed-step ODE steppers and Sturm counts.

Everything here integrates the second-order system phi'' = g(x) * phi along a
straight segment x(s) = z0 + s*u, s in [0, length], with

    g(x) = -(E + x^m)   (inside the monomial well / on a complex contour)
    g(x) = -E           (force-free region)

carried as the first-order complex pair (phi, w), w = dphi/ds.  The adaptive
stepper is a Dormand-Prince 5(4) embedded pair with PI step-size control and
FSAL reuse; the fixed-step one is classical RK4 and exists only as an
independent reference for tests.

Contour integrations grow like exp(r^((m+2)/2)) and overflow float64 long
before reaching the origin for m >= 6, so the stepper can rescale the state
by exact powers of two, returning the accumulated binary exponent.
"""

from numba import njit

STATUS_OK = 0
STATUS_MAX_STEPS = 1
STATUS_NONFINITE = 2
STATUS_UNDERFLOW = 3

_RESCALE_LIMIT = 2.0**600
_RESCALE_FACTOR = 2.0**-600
_NONFINITE_LIMIT = 1e305

# Dormand-Prince 5(4) tableau.
_C2, _C3, _C4, _C5 = 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0
_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)

# PI controller constants (safety factor, step-ratio clamps, PI exponents).
_SAFETY = 0.9
_FAC_MIN = 0.2
_FAC_MAX = 10.0
_BETA = 0.04
_EXPO1 = 0.2 - 0.75 * _BETA


@njit(cache=True, nogil=True, inline="always")
def _g_of_x(x, e, half_m, well):
    if well:
        p = x * x
        xm = p
        for _ in range(half_m - 1):
            xm *= p
        return -(e + xm)
    return complex(-e, 0.0)


@njit(cache=True, nogil=True)
def dopri5_segment(z0, u, length, e, half_m, well, phi, w, rtol, atol, h0, max_steps, rescale):
    """Adaptive 5(4) integration of (phi, w) over one straight segment.

    Returns (phi, w, exp2, status, attempts, s_reached) where the true state
    is (phi, w) * 2**exp2 and ``attempts`` counts accepted plus rejected
    steps.
    """
    c2 = u * u
    s = 0.0
    h = h0 if h0 < length else length
    exp2 = 0
    attempts = 0
    facold = 1.0e-4
    rejected = False

    k1p = w
    k1w = c2 * _g_of_x(z0, e, half_m, well) * phi

    while s < length:
        if attempts >= max_steps:
            return phi, w, exp2, STATUS_MAX_STEPS, attempts, s
        if h > length - s:
            h = length - s
        if s + h == s:
            return phi, w, exp2, STATUS_UNDERFLOW, attempts, s
        attempts += 1

        yp = phi + h * (_A21 * k1p)
        yw = w + h * (_A21 * k1w)
        k2p = yw
        k2w = c2 * _g_of_x(z0 + (s + _C2 * h) * u, e, half_m, well) * yp

        yp = phi + h * (_A31 * k1p + _A32 * k2p)
        yw = w + h * (_A31 * k1w + _A32 * k2w)
        k3p = yw
        k3w = c2 * _g_of_x(z0 + (s + _C3 * h) * u, e, half_m, well) * yp

        yp = phi + h * (_A41 * k1p + _A42 * k2p + _A43 * k3p)
        yw = w + h * (_A41 * k1w + _A42 * k2w + _A43 * k3w)
        k4p = yw
        k4w = c2 * _g_of_x(z0 + (s + _C4 * h) * u, e, half_m, well) * yp

        yp = phi + h * (_A51 * k1p + _A52 * k2p + _A53 * k3p + _A54 * k4p)
        yw = w + h * (_A51 * k1w + _A52 * k2w + _A53 * k3w + _A54 * k4w)
        k5p = yw
        k5w = c2 * _g_of_x(z0 + (s + _C5 * h) * u, e, half_m, well) * yp

        yp = phi + h * (_A61 * k1p + _A62 * k2p + _A63 * k3p + _A64 * k4p + _A65 * k5p)
        yw = w + h * (_A61 * k1w + _A62 * k2w + _A63 * k3w + _A64 * k4w + _A65 * k5w)
        k6p = yw
        k6w = c2 * _g_of_x(z0 + (s + h) * u, e, half_m, well) * yp

        phi_new = phi + h * (_B1 * k1p + _B3 * k3p + _B4 * k4p + _B5 * k5p + _B6 * k6p)
        w_new = w + h * (_B1 * k1w + _B3 * k3w + _B4 * k4w + _B5 * k5w + _B6 * k6w)

        k7p = w_new
        k7w = c2 * _g_of_x(z0 + (s + h) * u, e, half_m, well) * phi_new

        err_p = h * (_E1 * k1p + _E3 * k3p + _E4 * k4p + _E5 * k5p + _E6 * k6p + _E7 * k7p)
        err_w = h * (_E1 * k1w + _E3 * k3w + _E4 * k4w + _E5 * k5w + _E6 * k6w + _E7 * k7w)

        ap, apn = abs(phi), abs(phi_new)
        aw, awn = abs(w), abs(w_new)
        sc_p = atol + rtol * (ap if ap > apn else apn)
        sc_w = atol + rtol * (aw if aw > awn else awn)
        ep = abs(err_p) / sc_p
        ew = abs(err_w) / sc_w
        err = (0.5 * (ep * ep + ew * ew)) ** 0.5

        if err <= 1.0:
            s += h
            phi = phi_new
            w = w_new
            k1p = k7p
            k1w = k7w

            mag = apn if apn > awn else awn
            if mag != mag or mag > _NONFINITE_LIMIT:
                return phi, w, exp2, STATUS_NONFINITE, attempts, s
            if rescale and mag > _RESCALE_LIMIT:
                phi *= _RESCALE_FACTOR
                w *= _RESCALE_FACTOR
                k1p *= _RESCALE_FACTOR
                k1w *= _RESCALE_FACTOR
                exp2 += 600

            if err == 0.0:
                fac = 1.0 / _FAC_MAX
            else:
                fac11 = err**_EXPO1
                fac = fac11 / facold**_BETA
                fac = fac / _SAFETY
                if fac < 1.0 / _FAC_MAX:
                    fac = 1.0 / _FAC_MAX
                elif fac > 1.0 / _FAC_MIN:
                    fac = 1.0 / _FAC_MIN
            hnew = h / fac
            if rejected and hnew > h:
                hnew = h
            facold = err if err > 1.0e-4 else 1.0e-4
            h = hnew
            rejected = False
        else:
            fac11 = err**_EXPO1
            fac = fac11 / _SAFETY
            if fac > 1.0 / _FAC_MIN:
                fac = 1.0 / _FAC_MIN
            h = h / fac
            rejected = True

    return phi, w, exp2, STATUS_OK, attempts, s


@njit(cache=True, nogil=True)
def rk4_segment(z0, u, length, e, half_m, well, phi, w, nsteps):
    """Classical fixed-step RK4 over one segment (reference integrator)."""
    c2 = u * u
    h = length / nsteps
    for i in range(nsteps):
        s = i * h
        k1p = w
        k1w = c2 * _g_of_x(z0 + s * u, e, half_m, well) * phi
        gh = c2 * _g_of_x(z0 + (s + 0.5 * h) * u, e, half_m, well)
        yp = phi + 0.5 * h * k1p
        yw = w + 0.5 * h * k1w
        k2p = yw
        k2w = gh * yp
        yp = phi + 0.5 * h * k2p
        yw = w + 0.5 * h * k2w
        k3p = yw
        k3w = gh * yp
        g1 = c2 * _g_of_x(z0 + (s + h) * u, e, half_m, well)
        yp = phi + h * k3p
        yw = w + h * k3w
        k4p = yw
        k4w = g1 * yp
        phi = phi + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        w = w + (h / 6.0) * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
    return phi, w


@njit(cache=True, nogil=True)
def sturm_count(diag, esq, lam):
    """Number of eigenvalues of the symmetric tridiagonal matrix below lam.

    ``diag`` holds the diagonal, ``esq`` the squared (constant) off-diagonal.
    Counts sign changes of the LDL^T pivots; an exact zero pivot is nudged to
    the negative side, which at worst shifts a tie by one bisection step.
    """
    count = 0
    q = diag[0] - lam
    if q <= 0.0:
        if q == 0.0:
            q = -1e-300
        count += 1
    for i in range(1, diag.size):
        q = diag[i] - lam - esq / q
        if q <= 0.0:
            if q == 0.0:
                q = -1e-300
            count += 1
    return count

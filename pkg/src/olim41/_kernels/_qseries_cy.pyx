# cython: boundscheck=False, wraparound=False, cdivision=True
"""C implementations of the q-series double sums.

Same contract as the numpy fallback: each kernel returns (sum, abs_sum)
for the bare sum, accumulated in a fixed ascending (n, m) order with
Neumaier compensation. Kept free of the numpy C API so the module builds
with nothing beyond libc.
"""

from libc.math cimport sin, cos, fabs, sqrt, pi
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef inline double cabs2(double re, double im) nogil:
    return re * re + im * im


def direct_sum(int N, long p):
    """Real-product colored-Jones form of the surgery sum; see the
    python kernel for the formula."""
    cdef double *sin_tbl = <double *> malloc(2 * N * sizeof(double))
    cdef double *qre = <double *> malloc(4 * N * sizeof(double))
    cdef double *qim = <double *> malloc(4 * N * sizeof(double))
    if sin_tbl == NULL or qre == NULL or qim == NULL:
        free(sin_tbl); free(qre); free(qim)
        raise MemoryError()
    cdef long k, n, l, j
    cdef double s1, bracket, prod, jsum, jabs, tre, tim
    cdef double tot_re = 0.0, tot_im = 0.0, c_re = 0.0, c_im = 0.0
    cdef double t_re, t_im, abs_sum = 0.0
    for k in range(2 * N):
        sin_tbl[k] = sin(pi * k / N)
    for k in range(4 * N):
        qre[k] = cos(pi * k / (2.0 * N))
        qim[k] = sin(pi * k / (2.0 * N))
    s1 = sin_tbl[1]
    for n in range(1, N):
        prod = 1.0
        jsum = 1.0
        jabs = 1.0
        for l in range(1, n):
            prod *= -4.0 * sin_tbl[(n + l) % (2 * N)] * sin_tbl[n - l]
            jsum += prod
            jabs += fabs(prod)
        bracket = sin_tbl[n] / s1
        bracket *= bracket
        j = (p * n * n) % (4 * N)
        if j < 0:
            j += 4 * N
        tre = bracket * jsum * qre[j]
        tim = bracket * jsum * qim[j]
        abs_sum += bracket * jabs
        # Neumaier step, componentwise
        t_re = tot_re + tre
        if fabs(tot_re) >= fabs(tre):
            c_re += (tot_re - t_re) + tre
        else:
            c_re += (tre - t_re) + tot_re
        tot_re = t_re
        t_im = tot_im + tim
        if fabs(tot_im) >= fabs(tim):
            c_im += (tot_im - t_im) + tim
        else:
            c_im += (tim - t_im) + tot_im
        tot_im = t_im
    free(sin_tbl); free(qre); free(qim)
    return complex(tot_re + c_re, tot_im + c_im), abs_sum


def double_sum(int N, long p):
    """Pochhammer-ratio form of the surgery sum; see the python kernel
    for the formula."""
    cdef double *pre = <double *> malloc(N * sizeof(double))
    cdef double *pim = <double *> malloc(N * sizeof(double))
    cdef double *qre = <double *> malloc(4 * N * sizeof(double))
    cdef double *qim = <double *> malloc(4 * N * sizeof(double))
    if pre == NULL or pim == NULL or qre == NULL or qim == NULL:
        free(pre); free(pim); free(qre); free(qim)
        raise MemoryError()
    cdef long k, n, m, j, mmax
    cdef double fre, fim, are, aim, bre, bim, den, tre, tim
    cdef double tot_re = 0.0, tot_im = 0.0, c_re = 0.0, c_im = 0.0
    cdef double t_re, t_im, abs_sum = 0.0
    for k in range(4 * N):
        qre[k] = cos(pi * k / (2.0 * N))
        qim[k] = sin(pi * k / (2.0 * N))
    pre[0] = 1.0
    pim[0] = 0.0
    for k in range(1, N):
        # (q)_k = (q)_{k-1} * (1 - q^k), q^k from the quarter table at 4k
        fre = 1.0 - qre[(4 * k) % (4 * N)]
        fim = -qim[(4 * k) % (4 * N)]
        pre[k] = pre[k - 1] * fre - pim[k - 1] * fim
        pim[k] = pre[k - 1] * fim + pim[k - 1] * fre
    for n in range(1, N):
        mmax = n if n < N - n else N - n
        for m in range(mmax):
            # ratio = poch[n] poch[n+m] / (poch[n-1] poch[n-m-1])
            are = pre[n] * pre[n + m] - pim[n] * pim[n + m]
            aim = pre[n] * pim[n + m] + pim[n] * pre[n + m]
            bre = pre[n - 1] * pre[n - m - 1] - pim[n - 1] * pim[n - m - 1]
            bim = pre[n - 1] * pim[n - m - 1] + pim[n - 1] * pre[n - m - 1]
            den = cabs2(bre, bim)
            fre = (are * bre + aim * bim) / den
            fim = (aim * bre - are * bim) / den
            j = (p * n * n - 4 * n * m - 4 * n) % (4 * N)
            if j < 0:
                j += 4 * N
            tre = fre * qre[j] - fim * qim[j]
            tim = fre * qim[j] + fim * qre[j]
            abs_sum += sqrt(cabs2(tre, tim))
            t_re = tot_re + tre
            if fabs(tot_re) >= fabs(tre):
                c_re += (tot_re - t_re) + tre
            else:
                c_re += (tre - t_re) + tot_re
            tot_re = t_re
            t_im = tot_im + tim
            if fabs(tot_im) >= fabs(tim):
                c_im += (tot_im - t_im) + tim
            else:
                c_im += (tim - t_im) + tot_im
            tot_im = t_im
    free(pre); free(pim); free(qre); free(qim)
    return complex(tot_re + c_re, tot_im + c_im), abs_sum

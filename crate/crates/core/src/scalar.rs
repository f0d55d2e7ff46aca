use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps};

/// Floating-point scalar the numeric core is generic over.
///
/// Implemented for `f32` (training) and `f64` (gradient checks and oracles).
/// The `gemm` hook dispatches to the matching `matrixmultiply` kernel so
/// generic code keeps native GEMM throughput.
pub trait Scalar:
    Float + FromPrimitive + NumAssignOps + Sum + Default + Debug + Display + Send + Sync + 'static
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;

    fn from_f32(v: f32) -> Self;
    fn to_f32(self) -> f32;

    fn from_usize(v: usize) -> Self {
        Self::from_f64(v as f64)
    }

    /// C(m x n) <- alpha * op(A) * op(B) + beta * C, all row-major.
    ///
    /// `op(A)` is `m x k`; with `trans_a` the stored layout of `a` is `k x m`.
    /// `op(B)` is `k x n`; with `trans_b` the stored layout of `b` is `n x k`.
    fn gemm(
        trans_a: bool,
        trans_b: bool,
        m: usize,
        k: usize,
        n: usize,
        alpha: Self,
        a: &[Self],
        b: &[Self],
        beta: Self,
        c: &mut [Self],
    );
}

macro_rules! impl_scalar {
    ($t:ty, $gemm:path) => {
        impl Scalar for $t {
            #[inline]
            fn from_f64(v: f64) -> Self {
                v as $t
            }
            #[inline]
            fn to_f64(self) -> f64 {
                self as f64
            }
            #[inline]
            fn from_f32(v: f32) -> Self {
                v as $t
            }
            #[inline]
            fn to_f32(self) -> f32 {
                self as f32
            }

            fn gemm(
                trans_a: bool,
                trans_b: bool,
                m: usize,
                k: usize,
                n: usize,
                alpha: Self,
                a: &[Self],
                b: &[Self],
                beta: Self,
                c: &mut [Self],
            ) {
                assert!(a.len() >= m * k, "gemm: A too small");
                assert!(b.len() >= k * n, "gemm: B too small");
                assert!(c.len() >= m * n, "gemm: C too small");
                if m == 0 || n == 0 {
                    return;
                }
                let (rsa, csa) = if trans_a {
                    (1, m as isize)
                } else {
                    (k as isize, 1)
                };
                let (rsb, csb) = if trans_b {
                    (1, k as isize)
                } else {
                    (n as isize, 1)
                };
                unsafe {
                    $gemm(
                        m,
                        k,
                        n,
                        alpha,
                        a.as_ptr(),
                        rsa,
                        csa,
                        b.as_ptr(),
                        rsb,
                        csb,
                        beta,
                        c.as_mut_ptr(),
                        n as isize,
                        1,
                    );
                }
            }
        }
    };
}

impl_scalar!(f32, matrixmultiply::sgemm);
impl_scalar!(f64, matrixmultiply::dgemm);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gemm_transpose_variants() {
        // A = [[1, 2], [3, 4], [5, 6]] (3x2), B = [[1, 1], [2, 0]] (2x2)
        let a = [1.0f64, 2.0, 3.0, 4.0, 5.0, 6.0];
        let b = [1.0f64, 1.0, 2.0, 0.0];
        let mut c = [0.0f64; 6];
        f64::gemm(false, false, 3, 2, 2, 1.0, &a, &b, 0.0, &mut c);
        assert_eq!(c, [5.0, 1.0, 11.0, 3.0, 17.0, 5.0]);

        // A^T (2x3) * A (3x2) = [[35, 44], [44, 56]]
        let mut c2 = [0.0f64; 4];
        f64::gemm(true, false, 2, 3, 2, 1.0, &a, &a, 0.0, &mut c2);
        assert_eq!(c2, [35.0, 44.0, 44.0, 56.0]);

        // A (3x2) * A^T stored as A (3x2) -> 3x3
        let mut c3 = [0.0f64; 9];
        f64::gemm(false, true, 3, 2, 3, 1.0, &a, &a, 0.0, &mut c3);
        assert_eq!(c3, [5.0, 11.0, 17.0, 11.0, 25.0, 39.0, 17.0, 39.0, 61.0]);
    }
}

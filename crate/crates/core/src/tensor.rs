use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major tensor.
///
/// Images and feature maps use `[C, H, W]`, convolution weights
/// `[Cout, Cin, Kh, Kw]`, scalars `[1]`.
#[derive(Clone, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![T::zero(); n],
        }
    }

    pub fn full(shape: &[usize], v: T) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![v; n],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<T>) -> Self {
        assert_eq!(
            shape.iter().product::<usize>(),
            data.len(),
            "shape {:?} does not match data length {}",
            shape,
            data.len()
        );
        Tensor {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn scalar(v: T) -> Self {
        Tensor {
            shape: vec![1],
            data: vec![v],
        }
    }

    #[inline]
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    /// Single element of a `[1]` tensor.
    pub fn item(&self) -> T {
        assert_eq!(self.len(), 1, "item() on tensor of shape {:?}", self.shape);
        self.data[0]
    }

    /// Dimensions of a `[C, H, W]` tensor.
    pub fn dims3(&self) -> (usize, usize, usize) {
        assert_eq!(self.rank(), 3, "expected rank 3, got shape {:?}", self.shape);
        (self.shape[0], self.shape[1], self.shape[2])
    }

    #[inline]
    pub fn at3(&self, c: usize, y: usize, x: usize) -> T {
        let (_, h, w) = (self.shape[0], self.shape[1], self.shape[2]);
        self.data[(c * h + y) * w + x]
    }

    #[inline]
    pub fn at3_mut(&mut self, c: usize, y: usize, x: usize) -> &mut T {
        let (_, h, w) = (self.shape[0], self.shape[1], self.shape[2]);
        &mut self.data[(c * h + y) * w + x]
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch in zip_map");
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.shape, other.shape, "shape mismatch in add_assign");
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn scale_assign(&mut self, s: T) {
        for a in self.data.iter_mut() {
            *a *= s;
        }
    }

    pub fn sum(&self) -> T {
        self.data.iter().copied().sum()
    }

    pub fn mean(&self) -> T {
        self.sum() / T::from_usize(self.len().max(1))
    }

    pub fn min_value(&self) -> T {
        self.data.iter().copied().fold(T::infinity(), T::min)
    }

    pub fn max_value(&self) -> T {
        self.data.iter().copied().fold(T::neg_infinity(), T::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Channels `[c0, c1)` of a `[C, H, W]` tensor as a new tensor.
    pub fn slice_channels(&self, c0: usize, c1: usize) -> Self {
        let (c, h, w) = self.dims3();
        assert!(c0 < c1 && c1 <= c);
        Tensor {
            shape: vec![c1 - c0, h, w],
            data: self.data[c0 * h * w..c1 * h * w].to_vec(),
        }
    }

    /// Spatial crop of a `[C, H, W]` tensor.
    pub fn crop(&self, y0: usize, x0: usize, ch: usize, cw: usize) -> Result<Self> {
        let (c, h, w) = self.dims3();
        if y0 + ch > h || x0 + cw > w {
            return Err(Error::invalid(format!(
                "crop {}x{} at ({},{}) exceeds {}x{}",
                ch, cw, y0, x0, h, w
            )));
        }
        let mut out = Tensor::zeros(&[c, ch, cw]);
        for k in 0..c {
            for y in 0..ch {
                let src = ((k * h + y0 + y) * w + x0)..((k * h + y0 + y) * w + x0 + cw);
                let dst = ((k * ch + y) * cw)..((k * ch + y) * cw + cw);
                out.data[dst].copy_from_slice(&self.data[src]);
            }
        }
        Ok(out)
    }

    /// Horizontal flip (x axis) of a `[C, H, W]` tensor.
    pub fn flip_h(&self) -> Self {
        let (c, h, w) = self.dims3();
        let mut out = Tensor::zeros(&[c, h, w]);
        for k in 0..c {
            for y in 0..h {
                for x in 0..w {
                    *out.at3_mut(k, y, x) = self.at3(k, y, w - 1 - x);
                }
            }
        }
        out
    }

    /// Vertical flip (y axis) of a `[C, H, W]` tensor.
    pub fn flip_v(&self) -> Self {
        let (c, h, w) = self.dims3();
        let mut out = Tensor::zeros(&[c, h, w]);
        for k in 0..c {
            for y in 0..h {
                let src = (k * h + (h - 1 - y)) * w..(k * h + (h - 1 - y)) * w + w;
                let dst = (k * h + y) * w..(k * h + y) * w + w;
                out.data[dst].copy_from_slice(&self.data[src]);
            }
        }
        out
    }

    /// Counter-clockwise 90° rotation of a square `[C, H, W]` tensor.
    pub fn rot90(&self) -> Result<Self> {
        let (c, h, w) = self.dims3();
        if h != w {
            return Err(Error::invalid(format!(
                "rot90 requires square input, got {}x{}",
                h, w
            )));
        }
        let mut out = Tensor::zeros(&[c, w, h]);
        for k in 0..c {
            for y in 0..h {
                for x in 0..w {
                    // (y, x) -> (w-1-x, y)
                    *out.at3_mut(k, w - 1 - x, y) = self.at3(k, y, x);
                }
            }
        }
        Ok(out)
    }

    /// Reflect-pad a `[C, H, W]` tensor on the bottom/right edges.
    pub fn pad_reflect(&self, pad_h: usize, pad_w: usize) -> Self {
        let (c, h, w) = self.dims3();
        assert!(pad_h < h && pad_w < w, "reflect pad larger than input");
        let (nh, nw) = (h + pad_h, w + pad_w);
        let mut out = Tensor::zeros(&[c, nh, nw]);
        for k in 0..c {
            for y in 0..nh {
                let sy = if y < h { y } else { 2 * h - 2 - y };
                for x in 0..nw {
                    let sx = if x < w { x } else { 2 * w - 2 - x };
                    *out.at3_mut(k, y, x) = self.at3(k, sy, sx);
                }
            }
        }
        out
    }

    /// Largest absolute difference between two same-shape tensors.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.shape, other.shape);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max)
    }

    /// Cast every element to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| U::from_f64(v.to_f64())).collect(),
        }
    }
}

impl<T: Scalar> std::fmt::Debug for Tensor<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor{:?}", self.shape)?;
        if self.len() <= 16 {
            write!(f, " {:?}", self.data)
        } else {
            write!(f, " [{} elements]", self.len())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crop_and_flips() {
        let t = Tensor::<f64>::from_vec(&[1, 2, 3], (0..6).map(|v| v as f64).collect());
        let c = t.crop(0, 1, 2, 2).unwrap();
        assert_eq!(c.data(), &[1.0, 2.0, 4.0, 5.0]);
        assert!(t.crop(1, 0, 2, 3).is_err());

        let fh = t.flip_h();
        assert_eq!(fh.data(), &[2.0, 1.0, 0.0, 5.0, 4.0, 3.0]);
        let fv = t.flip_v();
        assert_eq!(fv.data(), &[3.0, 4.0, 5.0, 0.0, 1.0, 2.0]);
    }

    #[test]
    fn rot90_cycles() {
        let t = Tensor::<f64>::from_vec(&[1, 2, 2], vec![1.0, 2.0, 3.0, 4.0]);
        let r = t.rot90().unwrap();
        // ccw: top row becomes left column
        assert_eq!(r.data(), &[2.0, 4.0, 1.0, 3.0]);
        let mut four = t.clone();
        for _ in 0..4 {
            four = four.rot90().unwrap();
        }
        assert_eq!(four.data(), t.data());
    }

    #[test]
    fn reflect_pad_mirrors_edges() {
        let t = Tensor::<f64>::from_vec(&[1, 2, 2], vec![1.0, 2.0, 3.0, 4.0]);
        let p = t.pad_reflect(1, 1);
        assert_eq!(p.shape(), &[1, 3, 3]);
        assert_eq!(p.data(), &[1.0, 2.0, 1.0, 3.0, 4.0, 3.0, 1.0, 2.0, 1.0]);
    }
}

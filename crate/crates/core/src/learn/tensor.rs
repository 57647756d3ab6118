//! Dense 64-bit tensors with an optional gradient slot.

use super::LearnError;

/// An n-dimensional array of f64 values in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    values: Vec<f64>,
    grad: Option<Vec<f64>>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let n: usize = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            values: vec![0.0; n],
            grad: None,
        }
    }

    pub fn from_values(shape: &[usize], values: Vec<f64>) -> Result<Self, LearnError> {
        let n: usize = shape.iter().product();
        if values.len() != n {
            return Err(LearnError::ShapeMismatch {
                expected: format!("{shape:?} ({n} values)"),
                found: format!("{} values", values.len()),
            });
        }
        Ok(Self {
            shape: shape.to_vec(),
            values,
            grad: None,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Reinterpret the buffer under a new shape with the same element count.
    pub fn reshaped(mut self, shape: &[usize]) -> Result<Self, LearnError> {
        let n: usize = shape.iter().product();
        if n != self.values.len() {
            return Err(LearnError::ShapeMismatch {
                expected: format!("{:?}", self.shape),
                found: format!("{shape:?}"),
            });
        }
        self.shape = shape.to_vec();
        Ok(self)
    }

    /// Allocate (zeroed) the gradient slot if absent and return it.
    pub fn grad_mut(&mut self) -> &mut [f64] {
        if self.grad.is_none() {
            self.grad = Some(vec![0.0; self.values.len()]);
        }
        self.grad.as_mut().unwrap()
    }

    pub fn grad(&self) -> Option<&[f64]> {
        self.grad.as_deref()
    }

    pub fn zero_grad(&mut self) {
        if let Some(g) = self.grad.as_mut() {
            g.iter_mut().for_each(|v| *v = 0.0);
        }
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// y[i] += a * x[i] over equal-length slices. The compiler vectorizes this;
/// conv layers funnel their inner loops through here.
#[inline]
pub(crate) fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Dot product of two equal-length slices.
#[inline]
pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_values_checks_length() {
        assert!(Tensor::from_values(&[2, 3], vec![0.0; 6]).is_ok());
        assert!(Tensor::from_values(&[2, 3], vec![0.0; 5]).is_err());
    }

    #[test]
    fn reshape_preserves_count() {
        let t = Tensor::from_values(&[2, 3], (0..6).map(|i| i as f64).collect()).unwrap();
        let r = t.reshaped(&[6]).unwrap();
        assert_eq!(r.shape(), &[6]);
        assert!(Tensor::zeros(&[4]).reshaped(&[5]).is_err());
    }

    #[test]
    fn grad_slot_allocates_lazily() {
        let mut t = Tensor::zeros(&[3]);
        assert!(t.grad().is_none());
        t.grad_mut()[1] = 2.0;
        assert_eq!(t.grad().unwrap(), &[0.0, 2.0, 0.0]);
        t.zero_grad();
        assert_eq!(t.grad().unwrap(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn axpy_and_dot() {
        let x = [1.0, 2.0, 3.0];
        let mut y = [10.0, 10.0, 10.0];
        axpy(2.0, &x, &mut y);
        assert_eq!(y, [12.0, 14.0, 16.0]);
        assert_eq!(dot(&x, &[4.0, 5.0, 6.0]), 32.0);
    }
}

//! Layer implementations: convolutions, pooling, dense, activations.

use rand::Rng;

use super::tensor::{axpy, dot, Tensor};
use super::LearnError;

/// A trainable tensor plus its Adam moment buffers.
#[derive(Debug, Clone)]
pub struct Parameter {
    pub value: Tensor,
    pub(crate) m: Vec<f64>,
    pub(crate) v: Vec<f64>,
}

impl Parameter {
    pub fn new(value: Tensor) -> Self {
        let n = value.len();
        Self {
            value,
            m: vec![0.0; n],
            v: vec![0.0; n],
        }
    }

    /// He-uniform initialization: U(-sqrt(6/fan_in), +sqrt(6/fan_in)).
    pub fn he_uniform(shape: &[usize], fan_in: usize, rng: &mut impl Rng) -> Self {
        let limit = (6.0 / fan_in as f64).sqrt();
        let n: usize = shape.iter().product();
        let values: Vec<f64> = (0..n).map(|_| rng.gen_range(-limit..limit)).collect();
        Self::new(Tensor::from_values(shape, values).expect("shape/count agree"))
    }

    pub fn zeros(shape: &[usize]) -> Self {
        Self::new(Tensor::zeros(shape))
    }
}

/// One differentiable stage of a network.
pub trait Layer: Send {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError>;
    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError>;
    fn params_mut(&mut self) -> Vec<&mut Parameter> {
        Vec::new()
    }
    fn name(&self) -> &'static str;
}

fn shape_err(expected: impl Into<String>, found: &[usize]) -> LearnError {
    LearnError::ShapeMismatch {
        expected: expected.into(),
        found: format!("{found:?}"),
    }
}

// ---------------------------------------------------------------------------
// Conv1d — valid cross-correlation over [channels, length]
// ---------------------------------------------------------------------------

pub struct Conv1d {
    in_c: usize,
    out_c: usize,
    k: usize,
    weight: Parameter, // [out_c, in_c, k]
    bias: Parameter,   // [out_c]
    cached: Option<Tensor>,
}

impl Conv1d {
    pub fn new(in_c: usize, out_c: usize, k: usize, rng: &mut impl Rng) -> Self {
        Self {
            in_c,
            out_c,
            k,
            weight: Parameter::he_uniform(&[out_c, in_c, k], in_c * k, rng),
            bias: Parameter::zeros(&[out_c]),
            cached: None,
        }
    }

    pub fn out_len(&self, in_len: usize) -> usize {
        in_len + 1 - self.k
    }
}

impl Layer for Conv1d {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let s = input.shape();
        if s.len() != 2 || s[0] != self.in_c || s[1] < self.k {
            return Err(shape_err(format!("[{}, >={}]", self.in_c, self.k), s));
        }
        let (len, out_len) = (s[1], self.out_len(s[1]));
        let mut out = Tensor::zeros(&[self.out_c, out_len]);
        let w = self.weight.value.values();
        let b = self.bias.value.values();
        let x = input.values();
        for oc in 0..self.out_c {
            let out_row = &mut out.values_mut()[oc * out_len..(oc + 1) * out_len];
            out_row.iter_mut().for_each(|v| *v = b[oc]);
            for ic in 0..self.in_c {
                let x_row = &x[ic * len..(ic + 1) * len];
                let w_row = &w[(oc * self.in_c + ic) * self.k..(oc * self.in_c + ic + 1) * self.k];
                for (j, &wj) in w_row.iter().enumerate() {
                    axpy(wj, &x_row[j..j + out_len], out_row);
                }
            }
        }
        self.cached = Some(input.clone());
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let input = self
            .cached
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "conv1d" })?;
        let len = input.shape()[1];
        let out_len = self.out_len(len);
        if grad_out.shape() != [self.out_c, out_len] {
            return Err(shape_err(format!("[{}, {out_len}]", self.out_c), grad_out.shape()));
        }
        let mut grad_in = Tensor::zeros(&[self.in_c, len]);
        let x = input.values();
        let dy = grad_out.values();
        let w = self.weight.value.values();
        {
            let dw = self.weight.value.grad_mut();
            for oc in 0..self.out_c {
                let dy_row = &dy[oc * out_len..(oc + 1) * out_len];
                for ic in 0..self.in_c {
                    let x_row = &x[ic * len..(ic + 1) * len];
                    let dx_row = &mut grad_in.values_mut()[ic * len..(ic + 1) * len];
                    let base = (oc * self.in_c + ic) * self.k;
                    for j in 0..self.k {
                        axpy(w[base + j], dy_row, &mut dx_row[j..j + out_len]);
                        dw[base + j] += dot(dy_row, &x_row[j..j + out_len]);
                    }
                }
            }
        }
        let db = self.bias.value.grad_mut();
        for oc in 0..self.out_c {
            db[oc] += dy[oc * out_len..(oc + 1) * out_len].iter().sum::<f64>();
        }
        Ok(grad_in)
    }

    fn params_mut(&mut self) -> Vec<&mut Parameter> {
        vec![&mut self.weight, &mut self.bias]
    }

    fn name(&self) -> &'static str {
        "conv1d"
    }
}

// ---------------------------------------------------------------------------
// Conv2d — cross-correlation over [channels, height, width] with zero padding
// ---------------------------------------------------------------------------

pub struct Conv2d {
    in_c: usize,
    out_c: usize,
    k: usize,
    pad: usize,
    weight: Parameter, // [out_c, in_c, k, k]
    bias: Parameter,   // [out_c]
    cached_padded: Option<(Vec<f64>, [usize; 3])>, // padded input + original shape
}

impl Conv2d {
    pub fn new(in_c: usize, out_c: usize, k: usize, pad: usize, rng: &mut impl Rng) -> Self {
        Self {
            in_c,
            out_c,
            k,
            pad,
            weight: Parameter::he_uniform(&[out_c, in_c, k, k], in_c * k * k, rng),
            bias: Parameter::zeros(&[out_c]),
            cached_padded: None,
        }
    }

    pub fn out_dims(&self, h: usize, w: usize) -> (usize, usize) {
        (h + 2 * self.pad + 1 - self.k, w + 2 * self.pad + 1 - self.k)
    }

    fn pad_input(&self, x: &[f64], h: usize, w: usize) -> (Vec<f64>, usize, usize) {
        let (hp, wp) = (h + 2 * self.pad, w + 2 * self.pad);
        let mut padded = vec![0.0; self.in_c * hp * wp];
        for c in 0..self.in_c {
            for y in 0..h {
                let src = &x[(c * h + y) * w..(c * h + y + 1) * w];
                let dst_off = (c * hp + y + self.pad) * wp + self.pad;
                padded[dst_off..dst_off + w].copy_from_slice(src);
            }
        }
        (padded, hp, wp)
    }
}

impl Layer for Conv2d {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let s = input.shape();
        if s.len() != 3 || s[0] != self.in_c {
            return Err(shape_err(format!("[{}, h, w]", self.in_c), s));
        }
        let (h, w) = (s[1], s[2]);
        let (oh, ow) = self.out_dims(h, w);
        if oh == 0 || ow == 0 {
            return Err(shape_err(format!("input at least {0}x{0} after padding", self.k), s));
        }
        let (padded, hp, wp) = self.pad_input(input.values(), h, w);
        let mut out = Tensor::zeros(&[self.out_c, oh, ow]);
        let wv = self.weight.value.values();
        let b = self.bias.value.values();
        for oc in 0..self.out_c {
            let out_c = &mut out.values_mut()[oc * oh * ow..(oc + 1) * oh * ow];
            out_c.iter_mut().for_each(|v| *v = b[oc]);
            for ic in 0..self.in_c {
                let x_c = &padded[ic * hp * wp..(ic + 1) * hp * wp];
                let wbase = ((oc * self.in_c) + ic) * self.k * self.k;
                for ky in 0..self.k {
                    for kx in 0..self.k {
                        let wj = wv[wbase + ky * self.k + kx];
                        for y in 0..oh {
                            let src = &x_c[(y + ky) * wp + kx..(y + ky) * wp + kx + ow];
                            axpy(wj, src, &mut out_c[y * ow..(y + 1) * ow]);
                        }
                    }
                }
            }
        }
        self.cached_padded = Some((padded, [self.in_c, h, w]));
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let (padded, orig) = self
            .cached_padded
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "conv2d" })?;
        let [_, h, w] = *orig;
        let (oh, ow) = self.out_dims(h, w);
        if grad_out.shape() != [self.out_c, oh, ow] {
            return Err(shape_err(format!("[{}, {oh}, {ow}]", self.out_c), grad_out.shape()));
        }
        let (hp, wp) = (h + 2 * self.pad, w + 2 * self.pad);
        let mut dpadded = vec![0.0; self.in_c * hp * wp];
        let dy = grad_out.values();
        let wv = self.weight.value.values();
        {
            let dw = self.weight.value.grad_mut();
            for oc in 0..self.out_c {
                let dy_c = &dy[oc * oh * ow..(oc + 1) * oh * ow];
                for ic in 0..self.in_c {
                    let x_c = &padded[ic * hp * wp..(ic + 1) * hp * wp];
                    let dx_c = &mut dpadded[ic * hp * wp..(ic + 1) * hp * wp];
                    let wbase = ((oc * self.in_c) + ic) * self.k * self.k;
                    for ky in 0..self.k {
                        for kx in 0..self.k {
                            let wj = wv[wbase + ky * self.k + kx];
                            let mut acc = 0.0;
                            for y in 0..oh {
                                let dy_row = &dy_c[y * ow..(y + 1) * ow];
                                let off = (y + ky) * wp + kx;
                                axpy(wj, dy_row, &mut dx_c[off..off + ow]);
                                acc += dot(dy_row, &x_c[off..off + ow]);
                            }
                            dw[wbase + ky * self.k + kx] += acc;
                        }
                    }
                }
            }
        }
        let db = self.bias.value.grad_mut();
        for oc in 0..self.out_c {
            db[oc] += dy[oc * oh * ow..(oc + 1) * oh * ow].iter().sum::<f64>();
        }
        // Crop padding off the input gradient.
        let mut grad_in = Tensor::zeros(&[self.in_c, h, w]);
        for c in 0..self.in_c {
            for y in 0..h {
                let src_off = (c * hp + y + self.pad) * wp + self.pad;
                let dst = &mut grad_in.values_mut()[(c * h + y) * w..(c * h + y + 1) * w];
                dst.copy_from_slice(&dpadded[src_off..src_off + w]);
            }
        }
        Ok(grad_in)
    }

    fn params_mut(&mut self) -> Vec<&mut Parameter> {
        vec![&mut self.weight, &mut self.bias]
    }

    fn name(&self) -> &'static str {
        "conv2d"
    }
}

// ---------------------------------------------------------------------------
// Max pooling
// ---------------------------------------------------------------------------

/// Window-2 max pooling over the last axis of [channels, length].
/// Ties pick the lowest index; a trailing odd element is dropped.
pub struct MaxPool1d {
    cached: Option<(Vec<usize>, [usize; 2])>, // argmax flat indices + input shape
}

impl MaxPool1d {
    pub fn new() -> Self {
        Self { cached: None }
    }
}

impl Default for MaxPool1d {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for MaxPool1d {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let s = input.shape();
        if s.len() != 2 || s[1] < 2 {
            return Err(shape_err("[c, len>=2]", s));
        }
        let (c, len) = (s[0], s[1]);
        let out_len = len / 2;
        let x = input.values();
        let mut out = Tensor::zeros(&[c, out_len]);
        let mut arg = vec![0usize; c * out_len];
        for ci in 0..c {
            for t in 0..out_len {
                let i0 = ci * len + 2 * t;
                // strict > keeps the lowest index on ties
                let (best, idx) = if x[i0 + 1] > x[i0] { (x[i0 + 1], i0 + 1) } else { (x[i0], i0) };
                out.values_mut()[ci * out_len + t] = best;
                arg[ci * out_len + t] = idx;
            }
        }
        self.cached = Some((arg, [c, len]));
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let (arg, shape) = self
            .cached
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "maxpool1d" })?;
        if grad_out.len() != arg.len() {
            return Err(shape_err(format!("{} values", arg.len()), grad_out.shape()));
        }
        let mut grad_in = Tensor::zeros(&[shape[0], shape[1]]);
        for (g, &idx) in grad_out.values().iter().zip(arg) {
            grad_in.values_mut()[idx] += g;
        }
        Ok(grad_in)
    }

    fn name(&self) -> &'static str {
        "maxpool1d"
    }
}

/// 2x2 max pooling over [channels, height, width]; floor semantics, ties to
/// the lowest flat index.
pub struct MaxPool2d {
    cached: Option<(Vec<usize>, [usize; 3])>,
}

impl MaxPool2d {
    pub fn new() -> Self {
        Self { cached: None }
    }
}

impl Default for MaxPool2d {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for MaxPool2d {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let s = input.shape();
        if s.len() != 3 || s[1] < 2 || s[2] < 2 {
            return Err(shape_err("[c, h>=2, w>=2]", s));
        }
        let (c, h, w) = (s[0], s[1], s[2]);
        let (oh, ow) = (h / 2, w / 2);
        let x = input.values();
        let mut out = Tensor::zeros(&[c, oh, ow]);
        let mut arg = vec![0usize; c * oh * ow];
        for ci in 0..c {
            for y in 0..oh {
                for xo in 0..ow {
                    let base = (ci * h + 2 * y) * w + 2 * xo;
                    let candidates = [base, base + 1, base + w, base + w + 1];
                    let mut best = candidates[0];
                    for &i in &candidates[1..] {
                        if x[i] > x[best] {
                            best = i;
                        }
                    }
                    let o = (ci * oh + y) * ow + xo;
                    out.values_mut()[o] = x[best];
                    arg[o] = best;
                }
            }
        }
        self.cached = Some((arg, [c, h, w]));
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let (arg, shape) = self
            .cached
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "maxpool2d" })?;
        if grad_out.len() != arg.len() {
            return Err(shape_err(format!("{} values", arg.len()), grad_out.shape()));
        }
        let mut grad_in = Tensor::zeros(shape);
        for (g, &idx) in grad_out.values().iter().zip(arg) {
            grad_in.values_mut()[idx] += g;
        }
        Ok(grad_in)
    }

    fn name(&self) -> &'static str {
        "maxpool2d"
    }
}

// ---------------------------------------------------------------------------
// Dense
// ---------------------------------------------------------------------------

pub struct Dense {
    in_dim: usize,
    out_dim: usize,
    weight: Parameter, // [out, in]
    bias: Parameter,   // [out]
    cached: Option<Tensor>,
}

impl Dense {
    pub fn new(in_dim: usize, out_dim: usize, rng: &mut impl Rng) -> Self {
        Self {
            in_dim,
            out_dim,
            weight: Parameter::he_uniform(&[out_dim, in_dim], in_dim, rng),
            bias: Parameter::zeros(&[out_dim]),
            cached: None,
        }
    }
}

impl Layer for Dense {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        if input.shape() != [self.in_dim] {
            return Err(shape_err(format!("[{}]", self.in_dim), input.shape()));
        }
        let x = input.values();
        let w = self.weight.value.values();
        let b = self.bias.value.values();
        let mut out = Tensor::zeros(&[self.out_dim]);
        for (o, ov) in out.values_mut().iter_mut().enumerate() {
            *ov = b[o] + dot(&w[o * self.in_dim..(o + 1) * self.in_dim], x);
        }
        self.cached = Some(input.clone());
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let input = self
            .cached
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "dense" })?;
        if grad_out.shape() != [self.out_dim] {
            return Err(shape_err(format!("[{}]", self.out_dim), grad_out.shape()));
        }
        let x = input.values();
        let dy = grad_out.values();
        let w = self.weight.value.values();
        let mut grad_in = Tensor::zeros(&[self.in_dim]);
        {
            let dx = grad_in.values_mut();
            for (o, &g) in dy.iter().enumerate() {
                axpy(g, &w[o * self.in_dim..(o + 1) * self.in_dim], dx);
            }
        }
        let dw = self.weight.value.grad_mut();
        for (o, &g) in dy.iter().enumerate() {
            axpy(g, x, &mut dw[o * self.in_dim..(o + 1) * self.in_dim]);
        }
        let db = self.bias.value.grad_mut();
        axpy(1.0, dy, db);
        Ok(grad_in)
    }

    fn params_mut(&mut self) -> Vec<&mut Parameter> {
        vec![&mut self.weight, &mut self.bias]
    }

    fn name(&self) -> &'static str {
        "dense"
    }
}

// ---------------------------------------------------------------------------
// Activations and shape adapters
// ---------------------------------------------------------------------------

pub struct Relu {
    mask: Option<Vec<bool>>,
    shape: Vec<usize>,
}

impl Relu {
    pub fn new() -> Self {
        Self {
            mask: None,
            shape: Vec::new(),
        }
    }
}

impl Default for Relu {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for Relu {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let mut out = input.clone();
        let mask: Vec<bool> = input.values().iter().map(|&v| v > 0.0).collect();
        for (v, &keep) in out.values_mut().iter_mut().zip(&mask) {
            if !keep {
                *v = 0.0;
            }
        }
        self.mask = Some(mask);
        self.shape = input.shape().to_vec();
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let mask = self
            .mask
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "relu" })?;
        if grad_out.len() != mask.len() {
            return Err(shape_err(format!("{} values", mask.len()), grad_out.shape()));
        }
        let mut grad_in = Tensor::zeros(&self.shape);
        for ((d, g), &keep) in grad_in
            .values_mut()
            .iter_mut()
            .zip(grad_out.values())
            .zip(mask)
        {
            if keep {
                *d = *g;
            }
        }
        Ok(grad_in)
    }

    fn name(&self) -> &'static str {
        "relu"
    }
}

/// Collapses any shape to a rank-1 tensor.
pub struct Flatten {
    shape: Option<Vec<usize>>,
}

impl Flatten {
    pub fn new() -> Self {
        Self { shape: None }
    }
}

impl Default for Flatten {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for Flatten {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        self.shape = Some(input.shape().to_vec());
        input.clone().reshaped(&[input.len()])
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let shape = self
            .shape
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "flatten" })?;
        grad_out.clone().reshaped(shape)
    }

    fn name(&self) -> &'static str {
        "flatten"
    }
}

/// Softmax over a rank-1 tensor (max-shifted for stability).
pub struct Softmax {
    cached_out: Option<Vec<f64>>,
}

impl Softmax {
    pub fn new() -> Self {
        Self { cached_out: None }
    }
}

impl Default for Softmax {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for Softmax {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        if input.shape().len() != 1 {
            return Err(shape_err("rank-1 tensor", input.shape()));
        }
        let probs = super::loss::softmax(input.values());
        self.cached_out = Some(probs.clone());
        Tensor::from_values(&[probs.len()], probs)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let s = self
            .cached_out
            .as_ref()
            .ok_or(LearnError::BackwardBeforeForward { layer: "softmax" })?;
        if grad_out.len() != s.len() {
            return Err(shape_err(format!("{} values", s.len()), grad_out.shape()));
        }
        // dx_i = s_i * (dy_i - sum_j dy_j s_j)
        let inner = dot(grad_out.values(), s);
        let dx: Vec<f64> = grad_out
            .values()
            .iter()
            .zip(s)
            .map(|(dy, si)| si * (dy - inner))
            .collect();
        Tensor::from_values(&[s.len()], dx)
    }

    fn name(&self) -> &'static str {
        "softmax"
    }
}

/// Nearest-neighbour 2x upsampling over [channels, height, width].
pub struct Upsample2d {
    shape: Option<[usize; 3]>,
}

impl Upsample2d {
    pub fn new() -> Self {
        Self { shape: None }
    }
}

impl Default for Upsample2d {
    fn default() -> Self {
        Self::new()
    }
}

impl Layer for Upsample2d {
    fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let s = input.shape();
        if s.len() != 3 {
            return Err(shape_err("[c, h, w]", s));
        }
        let (c, h, w) = (s[0], s[1], s[2]);
        let mut out = Tensor::zeros(&[c, 2 * h, 2 * w]);
        let x = input.values();
        for ci in 0..c {
            for y in 0..h {
                for xi in 0..w {
                    let v = x[(ci * h + y) * w + xi];
                    let base = (ci * 2 * h + 2 * y) * 2 * w + 2 * xi;
                    let o = out.values_mut();
                    o[base] = v;
                    o[base + 1] = v;
                    o[base + 2 * w] = v;
                    o[base + 2 * w + 1] = v;
                }
            }
        }
        self.shape = Some([c, h, w]);
        Ok(out)
    }

    fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let [c, h, w] = self
            .shape
            .ok_or(LearnError::BackwardBeforeForward { layer: "upsample2d" })?;
        if grad_out.shape() != [c, 2 * h, 2 * w] {
            return Err(shape_err(format!("[{c}, {}, {}]", 2 * h, 2 * w), grad_out.shape()));
        }
        let dy = grad_out.values();
        let mut grad_in = Tensor::zeros(&[c, h, w]);
        for ci in 0..c {
            for y in 0..h {
                for xi in 0..w {
                    let base = (ci * 2 * h + 2 * y) * 2 * w + 2 * xi;
                    grad_in.values_mut()[(ci * h + y) * w + xi] =
                        dy[base] + dy[base + 1] + dy[base + 2 * w] + dy[base + 2 * w + 1];
                }
            }
        }
        Ok(grad_in)
    }

    fn name(&self) -> &'static str {
        "upsample2d"
    }
}

// ---------------------------------------------------------------------------
// Sequential container
// ---------------------------------------------------------------------------

/// A straight-line stack of layers.
pub struct Sequential {
    layers: Vec<Box<dyn Layer>>,
}

impl Sequential {
    pub fn new(layers: Vec<Box<dyn Layer>>) -> Self {
        Self { layers }
    }

    pub fn forward(&mut self, input: &Tensor) -> Result<Tensor, LearnError> {
        let mut x = input.clone();
        for layer in &mut self.layers {
            x = layer.forward(&x)?;
        }
        Ok(x)
    }

    pub fn backward(&mut self, grad_out: &Tensor) -> Result<Tensor, LearnError> {
        let mut g = grad_out.clone();
        for layer in self.layers.iter_mut().rev() {
            g = layer.backward(&g)?;
        }
        Ok(g)
    }

    pub fn params_mut(&mut self) -> Vec<&mut Parameter> {
        self.layers
            .iter_mut()
            .flat_map(|l| l.params_mut())
            .collect()
    }

    pub fn zero_grads(&mut self) {
        for p in self.params_mut() {
            p.value.zero_grad();
        }
    }

    pub fn param_count(&mut self) -> usize {
        self.params_mut().iter().map(|p| p.value.len()).sum()
    }
}

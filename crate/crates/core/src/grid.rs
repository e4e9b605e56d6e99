//! Energy-independent discretisation of a potential into propagation elements.

use crate::error::Result;
use crate::potential::PotentialSpec;
use crate::transfer::{compose, delta_entries, magnus_entries, slab_entries, Entries, TransferMatrix};

/// How smooth potentials are sampled on each slab.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlabRule {
    /// Constant slab at the midpoint value; second order.
    Midpoint,
    /// Two Gauss-node samples combined by a fourth-order Magnus step.
    #[default]
    Magnus4,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    /// Zero-width kick `strength·δ(x − at)`.
    Delta { at: f64, strength: f64 },
    /// Constant potential `v` on `[x0, x1]`, propagated exactly. `pieces` only
    /// sets how finely a recorded profile samples it.
    Flat { x0: f64, x1: f64, v: f64, pieces: usize },
    /// One slab of a smooth potential.
    Smooth { x0: f64, x1: f64, v1: f64, v2: f64 },
}

impl Element {
    pub fn end(&self) -> f64 {
        match *self {
            Self::Delta { at, .. } => at,
            Self::Flat { x1, .. } | Self::Smooth { x1, .. } => x1,
        }
    }

    pub fn transfer(&self, energy: f64) -> TransferMatrix {
        TransferMatrix::from_entries(self.entries(energy), energy)
    }

    fn entries(&self, energy: f64) -> Entries {
        match *self {
            Self::Delta { strength, .. } => delta_entries(strength),
            Self::Flat { x0, x1, v, .. } => slab_entries(v, energy, x1 - x0),
            Self::Smooth { x0, x1, v1, v2 } => magnus_entries(v1, v2, energy, x1 - x0),
        }
    }

    /// Sub-steps `(x_end, matrix)` used when recording a profile.
    pub fn substeps(&self, energy: f64) -> Vec<(f64, TransferMatrix)> {
        match *self {
            Self::Flat { x0, x1, v, pieces } if pieces > 1 => {
                let dx = (x1 - x0) / pieces as f64;
                let step = TransferMatrix::from_entries(slab_entries(v, energy, dx), energy);
                (1..=pieces)
                    .map(|i| (if i == pieces { x1 } else { x0 + dx * i as f64 }, step))
                    .collect()
            }
            _ => vec![(self.end(), self.transfer(energy))],
        }
    }
}

/// A potential broken into elements covering `[left, right]`; V = 0 outside.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub left: f64,
    pub right: f64,
    pub elements: Vec<Element>,
}

impl Grid {
    pub fn new(p: &PotentialSpec, n_slabs: usize, rule: SlabRule, support_tol: f64) -> Result<Self> {
        p.validate()?;
        let n_slabs = n_slabs.max(1);
        let (left, right) = p.support_interval(support_tol);
        let total = right - left;
        let share = |len: f64| -> usize {
            if total > 0.0 {
                ((n_slabs as f64 * len / total).ceil() as usize).max(1)
            } else {
                1
            }
        };
        let mut elements = Vec::new();
        match *p {
            PotentialSpec::DeltaPair { u1, u2, a } => {
                let h = left.abs();
                elements.push(flat(left, 0.0, 0.0, share(h)));
                elements.push(Element::Delta { at: 0.0, strength: -u1 });
                elements.push(flat(0.0, a, 0.0, share(a)));
                elements.push(Element::Delta { at: a, strength: u2 });
                elements.push(flat(a, right, 0.0, share(right - a)));
            }
            PotentialSpec::SquareWellBarrier { u1, u2, w, a } => {
                let h = 0.5 * a;
                elements.push(flat(-w - h, -h, -u1, share(w)));
                elements.push(flat(-h, h, 0.0, share(a)));
                elements.push(flat(h, h + w, u2, share(w)));
            }
            PotentialSpec::SinSquaredWellBarrier { w, a, .. } => {
                let h = 0.5 * a;
                let lobe = n_slabs.div_ceil(2).max(1);
                smooth_run(p, -w - h, -h, lobe, rule, &mut elements)?;
                elements.push(flat(-h, h, 0.0, 1));
                smooth_run(p, h, h + w, lobe, rule, &mut elements)?;
            }
            PotentialSpec::ScarfII { .. } => {
                if total > 0.0 {
                    smooth_run(p, left, right, n_slabs, rule, &mut elements)?;
                }
            }
            PotentialSpec::Sampled { ref xs, .. } => {
                for pair in xs.windows(2) {
                    smooth_run(p, pair[0], pair[1], share(pair[1] - pair[0]), rule, &mut elements)?;
                }
            }
        }
        Ok(Self { left, right, elements })
    }

    /// Ordered product of every element at `energy`.
    pub fn transfer(&self, energy: f64) -> TransferMatrix {
        let m = self
            .elements
            .iter()
            .fold([1.0, 0.0, 0.0, 1.0], |acc, el| compose(&acc, &el.entries(energy)));
        TransferMatrix::from_entries(m, energy)
    }

    /// Real solution propagated from `(psi, dpsi)` at `left`; returns the
    /// samples `(x, ψ, ψ′)` at every sub-step boundary, starting with `left`.
    ///
    /// The pair is rescaled whenever it grows past 1e100, so only ratios and
    /// signs of the output are meaningful in that regime.
    pub fn propagate(&self, energy: f64, psi: f64, dpsi: f64) -> Vec<(f64, f64, f64)> {
        let mut out = vec![(self.left, psi, dpsi)];
        let (mut y, mut dy) = (psi, dpsi);
        for el in &self.elements {
            for (x, m) in el.substeps(energy) {
                (y, dy) = m.apply_real(y, dy);
                let norm = y.abs().max(dy.abs());
                if norm > 1e100 {
                    for sample in out.iter_mut() {
                        sample.1 /= norm;
                        sample.2 /= norm;
                    }
                    y /= norm;
                    dy /= norm;
                }
                out.push((x, y, dy));
            }
        }
        out
    }

    /// Final `(ψ, ψ′)` only, without recording.
    pub fn shoot(&self, energy: f64, psi: f64, dpsi: f64) -> (f64, f64) {
        self.elements.iter().fold((psi, dpsi), |(y, dy), el| {
            let m = el.entries(energy);
            let (y, dy) = (m[0] * y + m[1] * dy, m[2] * y + m[3] * dy);
            let norm = y.abs().max(dy.abs());
            if norm > 1e100 {
                (y / norm, dy / norm)
            } else {
                (y, dy)
            }
        })
    }

    /// Final `(ψ, ψ′)` at `left` after propagating from `right` towards the left.
    pub fn shoot_back(&self, energy: f64, psi: f64, dpsi: f64) -> (f64, f64) {
        self.elements.iter().rev().fold((psi, dpsi), |(y, dy), el| {
            let m = el.entries(energy);
            let (y, dy) = (m[3] * y - m[1] * dy, -m[2] * y + m[0] * dy);
            let norm = y.abs().max(dy.abs());
            if norm > 1e100 {
                (y / norm, dy / norm)
            } else {
                (y, dy)
            }
        })
    }
}

fn flat(x0: f64, x1: f64, v: f64, pieces: usize) -> Element {
    Element::Flat { x0, x1, v, pieces }
}

fn smooth_run(p: &PotentialSpec, x0: f64, x1: f64, n: usize, rule: SlabRule, out: &mut Vec<Element>) -> Result<()> {
    let h = (x1 - x0) / n as f64;
    let g = 3.0_f64.sqrt() / 6.0;
    for i in 0..n {
        let a = x0 + h * i as f64;
        let b = if i + 1 == n { x1 } else { x0 + h * (i + 1) as f64 };
        let el = match rule {
            SlabRule::Midpoint => Element::Flat {
                x0: a,
                x1: b,
                v: p.evaluate(0.5 * (a + b))?,
                pieces: 1,
            },
            SlabRule::Magnus4 => {
                let w = b - a;
                Element::Smooth {
                    x0: a,
                    x1: b,
                    v1: p.evaluate(a + w * (0.5 - g))?,
                    v2: p.evaluate(a + w * (0.5 + g))?,
                }
            }
        };
        out.push(el);
    }
    Ok(())
}

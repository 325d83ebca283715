use super::word::{GroupPresentation, Word};
use crate::hypcore::{GeodesicTransfer, UnimodularMatrix};
use crate::prelude::*;

/// A homomorphism from a presented group into PSL(2,C), given on generators,
/// together with the boundary transfer used to carry leaves into H³.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    presentation: GroupPresentation,
    images: Vec<UnimodularMatrix>,
    transfer: GeodesicTransfer,
}

impl Representation {
    pub fn new(presentation: GroupPresentation, images: Vec<UnimodularMatrix>) -> Result<Self> {
        if images.len() != presentation.rank() {
            return Err(Error::InvalidPresentation("one image per generator is required"));
        }
        Ok(Representation {
            presentation,
            images,
            transfer: GeodesicTransfer::Identity,
        })
    }

    pub fn with_transfer(mut self, transfer: GeodesicTransfer) -> Self {
        self.transfer = transfer;
        self
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn images(&self) -> &[UnimodularMatrix] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> UnimodularMatrix {
        self.images[generator]
    }

    pub fn transfer(&self) -> &GeodesicTransfer {
        &self.transfer
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Same presentation and transfer, new generator images.
    pub fn with_images(&self, images: Vec<UnimodularMatrix>) -> Result<Self> {
        if images.len() != self.rank() {
            return Err(Error::InvalidPresentation("one image per generator is required"));
        }
        Ok(Representation {
            presentation: self.presentation.clone(),
            images,
            transfer: self.transfer.clone(),
        })
    }

    /// `g ρ g⁻¹` on every generator.
    pub fn conjugated(&self, g: &UnimodularMatrix) -> Self {
        Representation {
            presentation: self.presentation.clone(),
            images: self.images.iter().map(|m| m.conjugate_by(g)).collect(),
            transfer: self.transfer.clone(),
        }
    }

    pub fn evaluate(&self, w: &Word) -> UnimodularMatrix {
        evaluate_word(self, w)
    }

    pub fn parse_and_evaluate(&self, text: &str) -> Result<UnimodularMatrix> {
        Ok(self.evaluate(&self.presentation.parse_word(text)?))
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.images.iter().all(|m| m.is_real(tol))
    }

    pub fn relator_residual(&self) -> f64 {
        relator_residual(self)
    }

    pub(crate) fn letter_matrices(&self) -> Vec<UnimodularMatrix> {
        let mut out = Vec::with_capacity(2 * self.rank());
        for m in &self.images {
            out.push(*m);
            out.push(m.inverse());
        }
        out
    }
}

/// Ordered product of generator images (inverses for inverse letters).
pub fn evaluate_word(rho: &Representation, w: &Word) -> UnimodularMatrix {
    w.letters().iter().fold(UnimodularMatrix::IDENTITY, |acc, l| {
        let g = rho.images[l.generator];
        acc * if l.inverse { g.inverse() } else { g }
    })
}

/// Largest projective distance from the identity over all relators.
pub fn relator_residual(rho: &Representation) -> f64 {
    rho.presentation
        .relators()
        .iter()
        .map(|r| evaluate_word(rho, r).distance_to_identity())
        .fold(0.0, f64::max)
}

//! Images of words in `B/I_1` (the Hecke algebra of the full type) and in
//! the Lawrence-Krammer representation over `Z_0`.

use std::sync::Arc;

use crate::error::Result;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::lkrep::{LkModel, RepMatrix, Z0Coeffs};
use crate::rootsys::{DynkinType, RootSystem};

use super::{BmwWord, Letter, LetterKind, WordCombination};

/// The pair of images. Together they detect equality in `B/I_2`.
#[derive(Clone, PartialEq)]
pub struct RepImage {
    /// `e_i -> 0`, `g_i -> T_i`.
    pub hecke: HeckeElement,
    pub lk: RepMatrix<HeckeElement>,
}

impl std::fmt::Debug for RepImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepImage {{ hecke: {}, lk: {} }}", self.hecke, self.lk)
    }
}

pub struct WordModel {
    full: Arc<HeckeAlgebra>,
    lk: LkModel<Z0Coeffs>,
    sigma_inv: Vec<RepMatrix<HeckeElement>>,
}

impl WordModel {
    pub fn new(rs: Arc<RootSystem>) -> Result<WordModel> {
        let lk = LkModel::build(Z0Coeffs::new(rs.clone()))?;
        let sigma_inv = rs.nodes().map(|i| lk.sigma_inv(i)).collect();
        Ok(WordModel { full: HeckeAlgebra::full(rs), lk, sigma_inv })
    }

    pub fn build(ty: DynkinType) -> Result<WordModel> {
        WordModel::new(Arc::new(RootSystem::build(ty)))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.lk.root_system()
    }

    pub fn lk(&self) -> &LkModel<Z0Coeffs> {
        &self.lk
    }

    fn letter_matrix(&self, l: Letter) -> &RepMatrix<HeckeElement> {
        match l.kind {
            LetterKind::G => self.lk.sigma(l.node),
            LetterKind::GInv => &self.sigma_inv[l.node - 1],
            LetterKind::E => self.lk.e(l.node),
        }
    }

    fn letter_hecke(&self, l: Letter) -> Result<HeckeElement> {
        match l.kind {
            LetterKind::G => self.full.generator(l.node),
            LetterKind::GInv => self.full.generator_inv(l.node),
            LetterKind::E => Ok(self.full.zero()),
        }
    }

    pub fn rep_word(&self, w: &BmwWord) -> Result<RepImage> {
        self.rep_image(&WordCombination::word(w.clone()))
    }

    /// Linear extension over the combination. Words are visited in
    /// lexicographic order so products of common prefixes are reused.
    pub fn rep_image(&self, c: &WordCombination) -> Result<RepImage> {
        let z0 = self.lk.algebra().z0().clone();
        let mut words: Vec<_> = c.terms().iter().collect();
        words.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
        let mut stack: Vec<(RepMatrix<HeckeElement>, HeckeElement)> =
            vec![(self.lk.identity().clone(), self.full.one())];
        let mut prev: &[Letter] = &[];
        let mut lk = RepMatrix::zero(self.lk.dim());
        let mut hecke = self.full.zero();
        for (w, coeff) in words {
            let common = prev.iter().zip(&w.0).take_while(|(a, b)| a == b).count();
            stack.truncate(common + 1);
            for &l in &w.0[common..] {
                let (m, h) = stack.last().expect("nonempty");
                let h = if h.is_zero() { h.clone() } else { h.multiply(&self.letter_hecke(l)?)? };
                let m = m.mul(self.letter_matrix(l));
                stack.push((m, h));
            }
            let (m, h) = stack.last().expect("nonempty");
            lk = lk.add(&m.scale_left(&z0.scalar(coeff.clone())));
            hecke = hecke.add(&h.scale(coeff));
            prev = &w.0;
        }
        Ok(RepImage { hecke, lk })
    }
}

use super::representation::Representation;
use super::word::{Letter, Word};
use crate::hypcore::{BoundaryPoint, UnimodularMatrix};
use crate::prelude::*;

/// Default upper bound on word length for ball enumeration.
pub const DEFAULT_WORD_CAP: usize = 10;

/// Number of freely reduced words of length at most `len` on `rank` generators.
pub fn ball_size(rank: usize, len: usize) -> usize {
    if rank == 0 {
        return 1;
    }
    let mut total = 1usize;
    let mut layer = 2 * rank;
    for _ in 0..len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(2 * rank - 1);
    }
    total
}

/// All freely reduced words of length at most `len` with their images, in
/// shortlex order. Words are not identified by relators.
pub fn group_ball(rho: &Representation, len: usize) -> Result<Vec<(Word, UnimodularMatrix)>> {
    group_ball_with_cap(rho, len, DEFAULT_WORD_CAP)
}

pub fn group_ball_with_cap(
    rho: &Representation,
    len: usize,
    cap: usize,
) -> Result<Vec<(Word, UnimodularMatrix)>> {
    if len > cap {
        return Err(Error::CapExceeded {
            requested: len,
            cap,
        });
    }
    let letters = alphabet(rho.rank());
    let mats = rho.letter_matrices();
    let mut out = Vec::with_capacity(ball_size(rho.rank(), len));
    out.push((Word::empty(), UnimodularMatrix::IDENTITY));
    // breadth-first by length; each layer extends the previous one in order,
    // which keeps the whole list in shortlex order
    let mut start = 0;
    for _ in 0..len {
        let end = out.len();
        for k in start..end {
            for (li, &l) in letters.iter().enumerate() {
                let (w, m) = &out[k];
                if w.letters().last().is_some_and(|&p| p.cancels(l)) {
                    continue;
                }
                let mut next = w.letters().to_vec();
                next.push(l);
                let m = m * &mats[li];
                out.push((Word::from_letters(next), m));
            }
        }
        start = end;
    }
    Ok(out)
}

/// Depth-first walk of the ball of radius `len` without materializing it.
///
/// The visitor receives each word (as letters) with its image; returning
/// `false` skips the extensions of that word. The empty word comes first.
pub fn for_each_in_ball<F>(rho: &Representation, len: usize, cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[Letter], &UnimodularMatrix) -> bool,
{
    if len > cap {
        return Err(Error::CapExceeded {
            requested: len,
            cap,
        });
    }
    let letters = alphabet(rho.rank());
    let mats = rho.letter_matrices();
    let mut word: Vec<Letter> = Vec::with_capacity(len);
    let mut prefix: Vec<UnimodularMatrix> = Vec::with_capacity(len + 1);
    prefix.push(UnimodularMatrix::IDENTITY);
    if !visit(&word, &UnimodularMatrix::IDENTITY) || len == 0 {
        return Ok(());
    }
    // explicit stack of next-letter indices per depth
    let mut next: Vec<usize> = alloc::vec![0];
    while let Some(top) = next.last_mut() {
        let depth = word.len();
        if *top >= letters.len() {
            next.pop();
            if word.pop().is_some() {
                prefix.pop();
            }
            continue;
        }
        let li = *top;
        *top += 1;
        let l = letters[li];
        if word.last().is_some_and(|&p| p.cancels(l)) {
            continue;
        }
        let m = prefix[depth] * mats[li];
        word.push(l);
        let descend = visit(&word, &m);
        if descend && word.len() < len {
            prefix.push(m);
            next.push(0);
        } else {
            word.pop();
        }
    }
    Ok(())
}

/// Depth-first walk that carries boundary points instead of matrices.
///
/// Words grow on the left: a word `l·w` is visited after `w`, and its points
/// are `l(w(p))`, one generator at a time, which keeps the images accurate
/// even when the word's matrix has a large norm. The visitor receives the
/// letters from right to left (`letters[0]` acts first) together with the
/// transported points; returning `false` skips the extensions `l·w`.
pub(crate) fn for_each_translate<F>(
    rho: &Representation,
    len: usize,
    points: &[BoundaryPoint],
    mut visit: F,
) where
    F: FnMut(&[Letter], &[BoundaryPoint]) -> bool,
{
    let letters = alphabet(rho.rank());
    let mats = rho.letter_matrices();
    let n = points.len();
    let mut rev: Vec<Letter> = Vec::with_capacity(len);
    // images of `points` for each prefix depth, stored flat
    let mut images: Vec<BoundaryPoint> = points.to_vec();
    if !visit(&rev, points) || len == 0 {
        return;
    }
    let mut scratch: Vec<BoundaryPoint> = alloc::vec![BoundaryPoint::Infinity; n];
    let mut next: Vec<usize> = alloc::vec![0];
    while let Some(top) = next.last_mut() {
        if *top >= letters.len() {
            next.pop();
            if rev.pop().is_some() {
                images.truncate(images.len() - n);
            }
            continue;
        }
        let li = *top;
        *top += 1;
        let l = letters[li];
        if rev.last().is_some_and(|&p| p.cancels(l)) {
            continue;
        }
        let base = images.len() - n;
        for k in 0..n {
            scratch[k] = mats[li].apply(images[base + k]);
        }
        rev.push(l);
        let descend = visit(&rev, &scratch);
        if descend && rev.len() < len {
            images.extend_from_slice(&scratch);
            next.push(0);
        } else {
            rev.pop();
        }
    }
}

fn alphabet(rank: usize) -> Vec<Letter> {
    (0..rank)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect()
}

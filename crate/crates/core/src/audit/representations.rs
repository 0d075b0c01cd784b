use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Candidate tuples allowed before [`count_representations`] refuses.
pub const ENUMERATION_GUARD: f64 = 1e8;

/// Finite presentation `⟨x₁ … x_k | r₁, …⟩`; relator letters are `±i` for
/// `x_i^{±1}`, 1-based.
///
/// Wire form: `{"generators":int,"relators":[[±int,...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationFilter {
    All,
    Transitive,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self> {
        let g = GroupPresentation { generators, relators };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators == 0 {
            return Err(Error::InvalidPresentation("at least one generator is required".into()));
        }
        for (i, r) in self.relators.iter().enumerate() {
            if let Some(&l) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > self.generators) {
                return Err(Error::InvalidPresentation(format!(
                    "relator {i} uses letter {l} with {} generators",
                    self.generators
                )));
            }
        }
        Ok(())
    }

    /// Free group of the given rank (the unknot group when rank is 1).
    pub fn free(rank: usize) -> Self {
        GroupPresentation { generators: rank, relators: Vec::new() }
    }

    /// `⟨x, y | [x, y]⟩`
    pub fn hopf_link() -> Self {
        GroupPresentation { generators: 2, relators: vec![vec![1, 2, -1, -2]] }
    }

    /// `⟨x, y | xyx = yxy⟩`
    pub fn trefoil() -> Self {
        GroupPresentation { generators: 2, relators: vec![vec![1, 2, 1, -2, -1, -2]] }
    }
}

type Perm = Vec<u8>;

fn inverse(p: &[u8]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Whether the relator holds: following a point through the word returns it.
fn relator_holds(relator: &[i32], images: &[Perm], inverses: &[Perm], d: usize) -> bool {
    (0..d).all(|start| {
        let mut x = start as u8;
        for &l in relator {
            let g = l.unsigned_abs() as usize - 1;
            x = if l > 0 { images[g][x as usize] } else { inverses[g][x as usize] };
        }
        x as usize == start
    })
}

fn is_transitive(images: &[Perm], d: usize) -> bool {
    let mut seen = vec![false; d];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for p in images {
            let y = p[x] as usize;
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

struct Search<'a> {
    perms: &'a [Perm],
    inverses: &'a [Perm],
    /// relators to check once generator `k` has been assigned
    checks: Vec<Vec<&'a [i32]>>,
    d: usize,
    filter: RepresentationFilter,
}

impl Search<'_> {
    fn count_from(&self, images: &mut Vec<Perm>, inverses: &mut Vec<Perm>) -> u64 {
        let k = images.len();
        if k == self.checks.len() {
            return match self.filter {
                RepresentationFilter::All => 1,
                RepresentationFilter::Transitive => is_transitive(images, self.d) as u64,
            };
        }
        let mut total = 0;
        for (p, inv) in self.perms.iter().zip(self.inverses) {
            images.push(p.clone());
            inverses.push(inv.clone());
            if self.checks[k].iter().all(|r| relator_holds(r, images, inverses, self.d)) {
                total += self.count_from(images, inverses);
            }
            images.pop();
            inverses.pop();
        }
        total
    }
}

/// Number of homomorphisms from the presented group to `S_d`, i.e. tuples of
/// permutations satisfying every relator. Relators are checked as soon as
/// all their generators are assigned; the first generator's choices are
/// split across threads.
pub fn count_representations(g: &GroupPresentation, d: usize, filter: RepresentationFilter) -> Result<u64> {
    g.validate()?;
    if d == 0 {
        return Err(Error::InvalidPresentation("degree must be at least 1".into()));
    }
    let factorial: f64 = (1..=d).map(|x| x as f64).product();
    let candidates = factorial.powi(g.generators as i32);
    if candidates > ENUMERATION_GUARD {
        return Err(Error::TooLarge { candidates, guard: ENUMERATION_GUARD });
    }

    let perms: Vec<Perm> = (0..d as u8).permutations(d).collect();
    let inverses: Vec<Perm> = perms.iter().map(|p| inverse(p)).collect();
    let mut checks: Vec<Vec<&[i32]>> = vec![Vec::new(); g.generators];
    for r in &g.relators {
        // an empty relator is trivially satisfied
        if let Some(last) = r.iter().map(|l| l.unsigned_abs() as usize - 1).max() {
            checks[last].push(r.as_slice());
        }
    }
    let search = Search { perms: &perms, inverses: &inverses, checks, d, filter };

    let total = (0..perms.len())
        .into_par_iter()
        .map(|i| {
            let mut images = vec![perms[i].clone()];
            let mut invs = vec![inverses[i].clone()];
            if search.checks[0].iter().all(|r| relator_holds(r, &images, &invs, d)) {
                search.count_from(&mut images, &mut invs)
            } else {
                0
            }
        })
        .sum();
    Ok(total)
}

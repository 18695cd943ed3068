//! The simplex category: weakly monotone maps between finite ordinals,
//! cofaces, codegeneracies, and the unique epi-mono factorization.

use std::fmt;

/// A weakly monotone map `[n] -> [m]` where `[n] = {0, ..., n}`, stored by
/// its image vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneMap {
    codomain: usize,
    images: Vec<usize>,
}

impl MonotoneMap {
    /// Builds a map from its images; panics unless weakly monotone into
    /// `[codomain]`.
    pub fn new(codomain: usize, images: Vec<usize>) -> Self {
        assert!(!images.is_empty(), "the empty ordinal is not an object here");
        assert!(images.windows(2).all(|w| w[0] <= w[1]), "map must be weakly monotone");
        assert!(*images.last().unwrap() <= codomain, "image exceeds codomain");
        MonotoneMap { codomain, images }
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap { codomain: n, images: (0..=n).collect() }
    }

    /// The coface `delta_i : [n-1] -> [n]`, the injection missing `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        MonotoneMap { codomain: n, images: (0..n).map(|x| if x < i { x } else { x + 1 }).collect() }
    }

    /// The codegeneracy `sigma_j : [n+1] -> [n]`, hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        MonotoneMap {
            codomain: n,
            images: (0..=n + 1).map(|x| if x <= j { x } else { x - 1 }).collect(),
        }
    }

    /// Domain ordinal `n` of `[n] -> [m]`.
    pub fn domain(&self) -> usize {
        self.images.len() - 1
    }

    /// Codomain ordinal `m` of `[n] -> [m]`.
    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &MonotoneMap) -> MonotoneMap {
        assert_eq!(other.codomain, self.domain(), "non-composable maps");
        MonotoneMap {
            codomain: self.codomain,
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.images[0] == 0
            && *self.images.last().unwrap() == self.codomain
            && self.images.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// The canonical epi-mono data: `(missing, collapsed)` where `missing`
    /// lists the codomain elements not hit (ascending) and `collapsed` lists
    /// the domain indices `j` with `f(j) = f(j+1)` (ascending). The map is
    /// reconstructed by [`MonotoneMap::from_epi_mono`].
    pub fn epi_mono(&self) -> (Vec<usize>, Vec<usize>) {
        let missing =
            (0..=self.codomain).filter(|x| self.images.binary_search(x).is_err()).collect();
        let collapsed = (0..self.domain())
            .filter(|&j| self.images[j] == self.images[j + 1])
            .collect();
        (missing, collapsed)
    }

    /// Rebuilds the map `[n] -> [m]` with the given missing codomain elements
    /// and collapsed domain indices: the composition
    /// `delta_{i_s} . ... . delta_{i_1} . sigma_{j_1} . ... . sigma_{j_t}`
    /// with both index lists ascending.
    pub fn from_epi_mono(n: usize, m: usize, missing: &[usize], collapsed: &[usize]) -> Self {
        assert!(missing.windows(2).all(|w| w[0] < w[1]));
        assert!(collapsed.windows(2).all(|w| w[0] < w[1]));
        let k = n - collapsed.len();
        assert_eq!(k, m - missing.len(), "incompatible factorization data");
        let mut map = MonotoneMap::identity(n);
        // epi part: apply the largest collapsed index first
        let mut level = n;
        for &j in collapsed.iter().rev() {
            level -= 1;
            map = MonotoneMap::codegeneracy(level, j).compose(&map);
        }
        // mono part: apply the smallest missing element first
        for (step, &i) in missing.iter().enumerate() {
            map = MonotoneMap::coface(k + step + 1, i).compose(&map);
        }
        map
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]:(", self.domain(), self.codomain)?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}

/// All weakly monotone maps `[n] -> [m]`, in lexicographic order.
pub fn all_monotone_maps(n: usize, m: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::<usize>::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n + 1 {
            out.push(MonotoneMap::new(m, prefix));
            continue;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        // push in reverse so the output comes out lexicographically
        for v in (lo..=m).rev() {
            let mut next = prefix.clone();
            next.push(v);
            stack.push(next);
        }
    }
    out
}

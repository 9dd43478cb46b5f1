use serde::Serialize;

/// Colors at level `p` and the admissibility rules on triples.
#[derive(Clone, Debug, Serialize)]
pub struct ColorData {
    p: u32,
    colors: Vec<u32>,
    /// Largest allowed value of `i + j + k`.
    bound: u32,
}

impl ColorData {
    pub fn new(p: u32) -> Self {
        let (colors, bound) =
            if p % 2 == 0 { ((0..=p / 2 - 2).collect(), p - 4) } else { ((0..=p - 3).step_by(2).collect(), 2 * p - 4) };
        ColorData { p, colors, bound }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// All colors, ascending.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn is_color(&self, c: u32) -> bool {
        self.index_of(c).is_some()
    }

    pub fn index_of(&self, c: u32) -> Option<usize> {
        self.colors.binary_search(&c).ok()
    }

    /// Parity and total-size conditions, without the triangle inequalities.
    pub fn parity_and_bound(&self, i: u32, j: u32, k: u32) -> bool {
        [i, j, k].iter().all(|&x| self.is_color(x)) && (i + j + k) % 2 == 0 && i + j + k <= self.bound
    }

    pub fn admissible(&self, i: u32, j: u32, k: u32) -> bool {
        self.parity_and_bound(i, j, k) && i <= j + k && j <= i + k && k <= i + j
    }

    /// `{k : {i,j,k} admissible}`.
    pub fn a_set(&self, i: u32, j: u32) -> Vec<u32> {
        self.colors.iter().copied().filter(|&k| self.admissible(i, j, k)).collect()
    }

    /// `{i : {i,i,c} admissible}`.
    pub fn adiag(&self, c: u32) -> Vec<u32> {
        self.colors.iter().copied().filter(|&i| self.admissible(i, i, c)).collect()
    }

    /// `{c : {c,c,c} admissible}`.
    pub fn tset(&self) -> Vec<u32> {
        self.colors.iter().copied().filter(|&c| self.admissible(c, c, c)).collect()
    }

    /// Ordered pairs `(j,k)` with `{i,j,k}` admissible.
    pub fn pairs(&self, i: u32) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for &j in &self.colors {
            for &k in &self.colors {
                if self.admissible(i, j, k) {
                    out.push((j, k));
                }
            }
        }
        out
    }
}

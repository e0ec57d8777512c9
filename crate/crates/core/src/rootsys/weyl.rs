use super::{Node, Root, RootSystem};

/// A Weyl group element, stored as the images of the simple roots.
///
/// Column `j` (entries `j*rank .. (j+1)*rank`) holds the coefficients of
/// `w(alpha_{j+1})`. This is a faithful and canonical encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    images: Vec<i8>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut images = vec![0i8; rank * rank];
        for j in 0..rank {
            images[j * rank + j] = 1;
        }
        WeylElement { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank).all(|j| (0..self.rank).all(|k| self.images[j * self.rank + k] == (j == k) as i8))
    }

    /// `w(alpha_s)`.
    pub fn image(&self, s: Node) -> Root {
        let r = self.rank;
        Root(self.images[(s - 1) * r..s * r].iter().map(|&c| c as i32).collect())
    }

    pub(crate) fn image_is_positive(&self, s: Node) -> bool {
        let r = self.rank;
        self.images[(s - 1) * r..s * r].iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub(crate) fn right_mul_simple(&self, s: Node, cartan_row: &[i32]) -> WeylElement {
        let r = self.rank;
        let ws: Vec<i8> = self.images[(s - 1) * r..s * r].to_vec();
        let mut images = self.images.clone();
        for k in 0..r {
            let a = cartan_row[k] as i8;
            if a == 0 {
                continue;
            }
            for t in 0..r {
                images[k * r + t] -= a * ws[t];
            }
        }
        WeylElement { rank: r, images }
    }

    pub(crate) fn left_mul_simple(&self, s: Node, cartan_row: &[i32]) -> WeylElement {
        let r = self.rank;
        let mut images = self.images.clone();
        for j in 0..r {
            let col = &mut images[j * r..(j + 1) * r];
            let p: i32 = (0..r).map(|k| cartan_row[k] * col[k] as i32).sum();
            col[s - 1] -= p as i8;
        }
        WeylElement { rank: r, images }
    }

    /// Image of an arbitrary lattice vector.
    pub fn act(&self, b: &Root) -> Root {
        let r = self.rank;
        let mut out = vec![0i32; r];
        for (j, &c) in b.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for t in 0..r {
                out[t] += c * self.images[j * r + t] as i32;
            }
        }
        Root(out)
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &WeylElement) -> WeylElement {
        let r = self.rank;
        let mut images = Vec::with_capacity(r * r);
        for j in 1..=r {
            images.extend(self.act(&o.image(j)).0.into_iter().map(|c| c as i8));
        }
        WeylElement { rank: r, images }
    }

    pub fn invert(&self, rs: &RootSystem) -> WeylElement {
        let mut w = rs.reduced_word(self);
        w.reverse();
        rs.word_element(&w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots().iter().filter(|b| !self.act(b).is_positive()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_exhaustive() {
        let rs = RootSystem::from_name("A3").unwrap();
        let all: Vec<Node> = rs.nodes().collect();
        let w = rs.enumerate_parabolic(&all);
        assert_eq!(w.len(), 24);
        for a in &w {
            let len = a.length(&rs);
            assert_eq!(len, a.invert(&rs).length(&rs));
            let word = rs.reduced_word(a);
            assert_eq!(word.len(), len);
            assert_eq!(rs.word_element(&word), *a);
            assert!(a.compose(&a.invert(&rs)).is_identity());
            for b in &w {
                for beta in rs.positive_roots() {
                    assert_eq!(a.compose(b).act(beta), a.act(&b.act(beta)));
                }
            }
        }
    }

    #[test]
    fn braid_in_a2() {
        let rs = RootSystem::from_name("A2").unwrap();
        let w = rs.word_element(&[1, 2, 1]);
        assert_eq!(w, rs.word_element(&[2, 1, 2]));
        assert_eq!(rs.reduced_word(&w).len(), 3);
        assert_eq!(rs.identity().length(&rs), 0);
    }

    #[test]
    fn left_multiplication_matches_composition() {
        let rs = RootSystem::from_name("D4").unwrap();
        let w = rs.word_element(&[2, 1, 3, 2, 4]);
        for s in rs.nodes() {
            assert_eq!(rs.left_mul_simple(s, &w), rs.simple_reflection(s).compose(&w));
            assert_eq!(rs.right_mul_simple(&w, s), w.compose(&rs.simple_reflection(s)));
        }
    }
}

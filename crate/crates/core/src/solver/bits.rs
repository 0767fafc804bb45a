use crate::graph::Vertex;

/// Fixed-width bitset for the solver's hot loops.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Bits<W> {
    pub const ZERO: Self = Bits([0; W]);

    pub fn full(n: usize) -> Self {
        let mut b = Self::ZERO;
        for v in 0..n {
            b.set(v);
        }
        b
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut b = Self::ZERO;
        for v in vs {
            b.set(v);
        }
        b
    }

    #[inline]
    pub fn set(&mut self, v: Vertex) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn or(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] |= o.0[i];
        }
        r
    }

    #[inline]
    pub fn and(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }

    #[inline]
    pub fn and_not(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }

    #[inline]
    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_subset(&self, o: &Self) -> bool {
        (0..W).all(|i| self.0[i] & !o.0[i] == 0)
    }

    #[inline]
    pub fn intersects(&self, o: &Self) -> bool {
        (0..W).any(|i| self.0[i] & o.0[i] != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..W * 64).filter(|&v| self.0[v / 64] >> (v % 64) & 1 == 1)
    }
}

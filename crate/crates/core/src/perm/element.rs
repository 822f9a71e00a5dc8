/// Minimal interface shared by permutations and invertible GF(2) matrices, so
/// that representations and relation words can be evaluated uniformly.
pub trait GroupElement: Clone + PartialEq {
    /// `self * other`, the right factor acting first.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
    /// The identity of the group `self` lives in.
    fn identity_like(&self) -> Self;
    /// Size of the set (or space) acted on.
    fn degree(&self) -> usize;

    fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// `self * other * self^-1`.
    fn conjugate(&self, other: &Self) -> Self {
        self.compose(other).compose(&self.inverse())
    }
}

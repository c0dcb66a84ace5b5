//! Factor groups as permutation groups on right cosets.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{generate_group_with, Elem, Group, Subgroup};
use crate::perm::Permutation;

/// `ambient / kernel` together with the natural epimorphism.
pub struct Quotient {
    source: Subgroup,
    kernel: Subgroup,
    group: Group,
    /// Image of each element of `source`, aligned with `source.elements()`.
    images: Vec<Elem>,
}

/// Builds `ambient/kernel` from the right-multiplication action on the cosets
/// `kernel·g`. Cosets are numbered by their least element, in increasing order.
pub fn quotient_group(ambient: &Subgroup, kernel: &Subgroup) -> Result<Quotient> {
    if !ambient.has_normal(kernel) {
        return Err(Error::NotNormal);
    }
    let group = ambient.group();
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for &x in ambient.elements() {
        if coset_of[x as usize] != usize::MAX {
            continue;
        }
        for &k in kernel.elements() {
            coset_of[group.mul(k, x) as usize] = reps.len();
        }
        reps.push(x);
    }
    let action = |g: Elem| -> Permutation {
        let images = reps
            .iter()
            .map(|&r| coset_of[group.mul(r, g) as usize] as u32)
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    };
    let generators: Vec<Permutation> = ambient.generators().iter().map(|&g| action(g)).collect();
    let factor = generate_group_with(reps.len(), &generators, group.limits())?;
    let images = ambient
        .elements()
        .iter()
        .map(|&x| {
            factor
                .index_of(&action(x))
                .expect("action image lies in the factor group")
        })
        .collect();
    Ok(Quotient {
        source: ambient.clone(),
        kernel: kernel.clone(),
        group: factor,
        images,
    })
}

impl Quotient {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    /// Image of an element of the source group.
    pub fn image(&self, x: Elem) -> Elem {
        let pos = self
            .source
            .elements()
            .binary_search(&x)
            .expect("element of the source group");
        self.images[pos]
    }

    /// `HK/K` for `H ≤ source`.
    pub fn image_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.image(x)).collect();
        self.group.subgroup_generated(&gens)
    }

    /// Full preimage of a subgroup of the factor group.
    pub fn preimage(&self, q: &Subgroup) -> Subgroup {
        let group = self.source.group();
        let mut members = FixedBitSet::with_capacity(group.order());
        for (&x, &img) in self.source.elements().iter().zip(&self.images) {
            if q.contains(img) {
                members.insert(x as usize);
            }
        }
        Subgroup::from_members(group, members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;

    #[test]
    fn s4_mod_v4() {
        let p = |c: &[Vec<usize>]| Permutation::from_cycles(4, c).unwrap();
        let g = generate_group(4, &[p(&[vec![1, 2, 3, 4]]), p(&[vec![1, 2]])]).unwrap();
        let v4 = g
            .subgroup_from(&[p(&[vec![1, 2], vec![3, 4]]), p(&[vec![1, 3], vec![2, 4]])])
            .unwrap();
        let q = quotient_group(&g.whole(), &v4).unwrap();
        assert_eq!(q.group().order(), 6);
        let d8 = g.subgroup_from(&[p(&[vec![1, 2, 3, 4]]), p(&[vec![1, 3]])]).unwrap();
        assert_eq!(q.image_subgroup(&d8).order(), 2);
        assert_eq!(q.preimage(&q.group().trivial()), v4);
    }

    #[test]
    fn rejects_non_normal() {
        let p = |c: &[Vec<usize>]| Permutation::from_cycles(3, c).unwrap();
        let g = generate_group(3, &[p(&[vec![1, 2, 3]]), p(&[vec![1, 2]])]).unwrap();
        let c2 = g.subgroup_from(&[p(&[vec![1, 2]])]).unwrap();
        assert!(matches!(quotient_group(&g.whole(), &c2), Err(Error::NotNormal)));
    }
}

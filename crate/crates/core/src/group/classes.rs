use super::FiniteGroup;

/// Conjugacy classes, commutator subgroup and abelianization.
#[derive(Clone, Debug)]
pub struct ClassStructure {
    /// Class index of each element; classes are numbered by least element.
    pub class_of: Vec<usize>,
    /// Least element of each class.
    pub class_reps: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub commutator_subgroup: Vec<usize>,
    pub abelianization: FiniteGroup,
    /// Projection `G -> G^ab`.
    pub ab_projection: Vec<usize>,
}

impl ClassStructure {
    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }
}

pub fn class_structure(g: &FiniteGroup) -> ClassStructure {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut class_reps = Vec::new();
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = class_reps.len();
        class_reps.push(x);
        let mut members: Vec<usize> = (0..n).map(|y| g.conjugate(x, y)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = c;
        }
        classes.push(members);
    }
    let commutators: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| g.commutator(a, b)).collect();
    let commutator_subgroup = g.generated_subgroup(&commutators);
    let (abelianization, ab_projection) =
        g.quotient_by_normal(&commutator_subgroup).expect("commutator subgroup is normal");
    ClassStructure { class_of, class_reps, classes, commutator_subgroup, abelianization, ab_projection }
}

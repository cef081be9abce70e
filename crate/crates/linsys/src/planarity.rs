//! Planarity with verifiable certificates.
//!
//! A planar verdict carries a rotation system; a non-planar verdict
//! carries a subdivision of K5 or K3,3 found in the graph. Either
//! certificate can be re-checked from scratch by [`validate_certificate`],
//! which never trusts the decision procedure:
//!
//! - an embedding is accepted only if the rotations are permutations of
//!   the true neighbor sets and face-tracing satisfies Euler's relation
//!   `v - e + f = 2` on every connected component;
//! - an obstruction is accepted only if its branch vertices and paths
//!   form a genuine, internally disjoint subdivision using edges of the
//!   graph.
//!
//! The decision procedure embeds one block at a time: find a cycle,
//! then repeatedly route a path of some unembedded fragment through a
//! face that contains all of the fragment's attachments (choosing a
//! fragment with a unique admissible face first). A fragment with no
//! admissible face proves the block non-planar, in which case a
//! Kuratowski subdivision is isolated by deleting every edge whose
//! removal keeps the graph non-planar.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::Graph;

/// Cyclic neighbor order around every vertex of a planar graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the tested graph.
///
/// For `K5`, `branch` lists five vertices and `paths` holds the ten
/// connecting paths in pair order (0,1), (0,2), ..., (3,4). For `K33`,
/// `branch[0..3]` and `branch[3..6]` are the two sides and `paths` holds
/// the nine connecting paths in row-major order. Every path starts and
/// ends at its branch vertices and is internally disjoint from all
/// others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Embedding(Embedding),
    Obstruction(Obstruction),
}

/// Decides planarity and returns a certificate either way.
pub fn is_planar(g: &Graph) -> (bool, Certificate) {
    match try_embed(g) {
        Some(embedding) => (true, Certificate::Embedding(embedding)),
        None => (false, Certificate::Obstruction(extract_obstruction(g))),
    }
}

/// Re-checks a certificate against the graph. Returns false on any
/// inconsistency; never trusts the producer.
pub fn validate_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::Embedding(e) => check_embedding(g, e).is_ok(),
        Certificate::Obstruction(o) => check_obstruction(g, o).is_ok(),
    }
}

// ---------------------------------------------------------------------
// Embedding construction
// ---------------------------------------------------------------------

fn try_embed(g: &Graph) -> Option<Embedding> {
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let local = LocalGraph::new(&block);
        let faces = embed_block(&local)?;
        for (lv, rot) in block_rotation(&local, &faces).into_iter().enumerate() {
            let gv = local.to_global[lv];
            rotation[gv].extend(rot.into_iter().map(|lu| local.to_global[lu]));
        }
    }
    Some(Embedding { rotation })
}

fn decide_planar(g: &Graph) -> bool {
    blocks(g)
        .into_iter()
        .filter(|b| b.len() > 1)
        .all(|b| embed_block(&LocalGraph::new(&b)).is_some())
}

/// Biconnected components as edge lists (bridges come out as single
/// edges), via depth-first lowpoints with an edge stack.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'g> {
        g: &'g Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut State, u: usize, parent: usize) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        let g = st.g;
        for &v in g.neighbors(u) {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, u);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(&top) = st.stack.last() {
                        if st.disc[top.0] >= st.disc[v] {
                            block.push(st.stack.pop().unwrap());
                        } else {
                            break;
                        }
                    }
                    block.push(st.stack.pop().unwrap()); // the edge (u, v)
                    st.out.push(block);
                }
            } else if v != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let n = g.vertex_count();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for s in 0..n {
        if st.disc[s] == 0 {
            dfs(&mut st, s, usize::MAX);
            debug_assert!(st.stack.is_empty());
        }
    }
    st.out
}

/// A block reindexed to dense local vertex ids.
struct LocalGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    to_global: Vec<usize>,
}

impl LocalGraph {
    fn new(edges: &[(usize, usize)]) -> Self {
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for &(u, v) in edges {
            verts.insert(u);
            verts.insert(v);
        }
        let to_global: Vec<usize> = verts.into_iter().collect();
        let to_local: BTreeMap<usize, usize> = to_global
            .iter()
            .enumerate()
            .map(|(l, &g)| (g, l))
            .collect();
        let mut adj = vec![Vec::new(); to_global.len()];
        for &(u, v) in edges {
            let (lu, lv) = (to_local[&u], to_local[&v]);
            adj[lu].push(lv);
            adj[lv].push(lu);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        LocalGraph {
            adj,
            edge_count: edges.len(),
            to_global,
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }
}

#[derive(Debug)]
enum Fragment {
    Chord(usize, usize),
    Comp { verts: Vec<usize>, attach: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Comp { attach, .. } => attach.clone(),
        }
    }
}

/// Face-by-face embedding of one biconnected block. Returns the face
/// boundary cycles of a planar embedding, or None when some fragment has
/// no admissible face.
fn embed_block(local: &LocalGraph) -> Option<Vec<Vec<usize>>> {
    let n = local.n();
    debug_assert!(n >= 3, "blocks with one edge are handled by the caller");

    let cycle = some_cycle(local);
    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        h_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while h_edges.len() < local.edge_count {
        let fragments = find_fragments(local, &in_h, &h_edges);
        assert!(
            !fragments.is_empty(),
            "unembedded edges must form fragments"
        );
        let face_sets: Vec<BTreeSet<usize>> = faces
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|frag| {
                let attach = frag.attachments();
                (0..faces.len())
                    .filter(|&fi| attach.iter().all(|a| face_sets[fi].contains(a)))
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return None;
        }
        // A fragment with a unique admissible face is forced; otherwise
        // any choice is safe.
        let pick = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let face_idx = admissible[pick][0];
        let path = alpha_path(local, &fragments[pick], &in_h);

        let face = &faces[face_idx];
        let i = face.iter().position(|&v| v == path[0]).expect("attachment on face");
        let j = face
            .iter()
            .position(|&v| v == *path.last().unwrap())
            .expect("attachment on face");
        assert_ne!(i, j, "alpha path endpoints must differ");
        let m = face.len();
        let mut arc1 = Vec::new();
        let mut k = i;
        loop {
            arc1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % m;
        }
        let mut arc2 = Vec::new();
        let mut k = j;
        loop {
            arc2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % m;
        }
        let interior = &path[1..path.len() - 1];
        let mut f1 = arc1;
        f1.extend(interior.iter().rev());
        let mut f2 = arc2;
        f2.extend(interior.iter());

        faces[face_idx] = f1;
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(norm(w[0], w[1]));
        }
        for &v in interior {
            in_h[v] = true;
        }
    }
    debug_assert_eq!(
        faces.iter().map(Vec::len).sum::<usize>(),
        2 * local.edge_count,
        "face boundaries must cover each edge twice"
    );
    debug_assert_eq!(
        n as isize - local.edge_count as isize + faces.len() as isize,
        2,
        "Euler's relation on the block"
    );
    Some(faces)
}

/// Any simple cycle in a graph of minimum degree two: walk without
/// immediately backtracking until a vertex repeats.
fn some_cycle(local: &LocalGraph) -> Vec<usize> {
    let mut walk = vec![0usize];
    let mut pos = vec![usize::MAX; local.n()];
    pos[0] = 0;
    let mut prev = usize::MAX;
    loop {
        let u = *walk.last().unwrap();
        let next = *local.adj[u]
            .iter()
            .find(|&&v| v != prev)
            .expect("minimum degree two inside a block");
        if pos[next] != usize::MAX {
            return walk[pos[next]..].to_vec();
        }
        pos[next] = walk.len();
        walk.push(next);
        prev = u;
    }
}

fn find_fragments(
    local: &LocalGraph,
    in_h: &[bool],
    h_edges: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    for u in 0..local.n() {
        if !in_h[u] {
            continue;
        }
        for &v in &local.adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                fragments.push(Fragment::Chord(u, v));
            }
        }
    }
    let mut seen = vec![false; local.n()];
    for s in 0..local.n() {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut verts = vec![s];
        let mut attach = BTreeSet::new();
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &local.adj[u] {
                if in_h[v] {
                    attach.insert(v);
                } else if !seen[v] {
                    seen[v] = true;
                    verts.push(v);
                    queue.push_back(v);
                }
            }
        }
        verts.sort_unstable();
        fragments.push(Fragment::Comp {
            verts,
            attach: attach.into_iter().collect(),
        });
    }
    fragments
}

/// A path through the fragment joining two distinct attachment vertices,
/// with every interior vertex outside the embedded subgraph.
fn alpha_path(local: &LocalGraph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    match frag {
        Fragment::Chord(u, v) => vec![*u, *v],
        Fragment::Comp { verts, attach } => {
            let inside: BTreeSet<usize> = verts.iter().copied().collect();
            let (a1, a2) = (attach[0], attach[1]);
            // Breadth-first search from a1 through the component to a2.
            let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue = VecDeque::new();
            for &x in local.adj[a1].iter().filter(|x| inside.contains(x)) {
                if !parent.contains_key(&x) {
                    parent.insert(x, usize::MAX);
                    queue.push_back(x);
                }
            }
            while let Some(u) = queue.pop_front() {
                if local.adj[u].contains(&a2) {
                    let mut path = vec![a2, u];
                    let mut cur = u;
                    while parent[&cur] != usize::MAX {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.push(a1);
                    path.reverse();
                    debug_assert!(path[1..path.len() - 1].iter().all(|&x| !in_h[x]));
                    return path;
                }
                for &v in &local.adj[u] {
                    if inside.contains(&v) && !parent.contains_key(&v) {
                        parent.insert(v, u);
                        queue.push_back(v);
                    }
                }
            }
            unreachable!("fragment must connect two attachments");
        }
    }
}

/// Turns the face cycles of one block into a rotation system by making
/// the face directions globally consistent and reading the corner
/// successor around each vertex.
fn block_rotation(local: &LocalGraph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // edge -> (face, traverses-min-to-max) occurrences
    let mut edge_uses: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for k in 0..face.len() {
            let (a, b) = (face[k], face[(k + 1) % face.len()]);
            edge_uses
                .entry(norm(a, b))
                .or_default()
                .push((fi, a < b));
        }
    }
    for uses in edge_uses.values() {
        assert_eq!(uses.len(), 2, "each edge lies on two face boundaries");
    }

    // Flip faces so the two traversals of every edge run in opposite
    // directions; the dual of a block embedding is connected, so one
    // sweep settles everything.
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    for start in 0..faces.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let ef = flip[f].unwrap();
            for k in 0..faces[f].len() {
                let (a, b) = (faces[f][k], faces[f][(k + 1) % faces[f].len()]);
                for &(f2, dir2) in &edge_uses[&norm(a, b)] {
                    if f2 == f {
                        continue;
                    }
                    let dir1 = (a < b) != ef;
                    let need = !dir1; // opposite traversal
                    let required_flip = dir2 != need;
                    match flip[f2] {
                        None => {
                            flip[f2] = Some(required_flip);
                            queue.push_back(f2);
                        }
                        Some(existing) => {
                            assert_eq!(existing, required_flip, "orientable embedding");
                        }
                    }
                }
            }
        }
    }

    // succ[v]: incoming neighbor -> outgoing neighbor at each corner.
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); local.n()];
    for (fi, face) in faces.iter().enumerate() {
        let mut cycle: Vec<usize> = face.clone();
        if flip[fi].unwrap() {
            cycle.reverse();
        }
        let m = cycle.len();
        for k in 0..m {
            let a = cycle[k];
            let v = cycle[(k + 1) % m];
            let w = cycle[(k + 2) % m];
            let old = succ[v].insert(a, w);
            assert!(old.is_none(), "each dart has one successor");
        }
    }

    (0..local.n())
        .map(|v| {
            let deg = local.adj[v].len();
            let start = local.adj[v][0];
            let mut rot = vec![start];
            let mut cur = start;
            loop {
                let next = succ[v][&cur];
                if next == start {
                    break;
                }
                rot.push(next);
                cur = next;
            }
            assert_eq!(rot.len(), deg, "corners around a vertex form one cycle");
            rot
        })
        .collect()
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

// ---------------------------------------------------------------------
// Obstruction extraction
// ---------------------------------------------------------------------

/// Deletes every edge whose removal keeps the graph non-planar; what
/// remains (ignoring isolated vertices) is exactly a subdivision of K5
/// or K3,3.
fn extract_obstruction(g: &Graph) -> Obstruction {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges();
    assert!(
        !decide_planar(&Graph::from_edges(n, &edges)),
        "obstruction requested for a planar graph"
    );
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if !decide_planar(&Graph::from_edges(n, &trial)) {
            edges = trial; // the edge was not needed for non-planarity
        } else {
            i += 1;
        }
    }

    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for nb in adj.values_mut() {
        nb.sort_unstable();
    }
    let branch: Vec<usize> = adj
        .iter()
        .filter(|(_, nb)| nb.len() >= 3)
        .map(|(&v, _)| v)
        .collect();
    assert!(
        adj.iter().all(|(_, nb)| nb.len() == 2 || nb.len() >= 3),
        "minimal non-planar subgraph has no pendant vertices"
    );

    // Walk from each branch vertex through degree-2 vertices to the next
    // branch vertex; each of the subdivision paths is found twice.
    let branch_set: BTreeSet<usize> = branch.iter().copied().collect();
    let mut path_of: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &b in &branch {
        for &first in &adj[&b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !branch_set.contains(&cur) {
                let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                path.push(cur);
            }
            let end = cur;
            assert_ne!(b, end, "subdivision paths join distinct branch vertices");
            if b < end {
                let old = path_of.insert((b, end), path);
                assert!(old.is_none(), "one path per branch pair");
            }
        }
    }

    let degree_profile: Vec<usize> = branch.iter().map(|&b| adj[&b].len()).collect();
    if branch.len() == 5 && degree_profile.iter().all(|&d| d == 4) {
        let mut paths = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                paths.push(oriented(&path_of, branch[i], branch[j]));
            }
        }
        Obstruction {
            kind: ObstructionKind::K5,
            branch,
            paths,
        }
    } else if branch.len() == 6 && degree_profile.iter().all(|&d| d == 3) {
        let b0 = branch[0];
        let joined: BTreeSet<usize> = branch
            .iter()
            .copied()
            .filter(|&b| b != b0 && path_of.contains_key(&norm(b0, b)))
            .collect();
        let mut side0: Vec<usize> = branch
            .iter()
            .copied()
            .filter(|b| !joined.contains(b))
            .collect();
        let mut side1: Vec<usize> = joined.into_iter().collect();
        side0.sort_unstable();
        side1.sort_unstable();
        assert_eq!((side0.len(), side1.len()), (3, 3), "K3,3 core sides");
        if side1[0] < side0[0] {
            std::mem::swap(&mut side0, &mut side1);
        }
        let branch: Vec<usize> = side0.iter().chain(side1.iter()).copied().collect();
        let mut paths = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                paths.push(oriented(&path_of, branch[i], branch[j]));
            }
        }
        Obstruction {
            kind: ObstructionKind::K33,
            branch,
            paths,
        }
    } else {
        unreachable!("minimal non-planar subgraph must be a K5 or K3,3 subdivision");
    }
}

fn oriented(path_of: &BTreeMap<(usize, usize), Vec<usize>>, from: usize, to: usize) -> Vec<usize> {
    let path = path_of
        .get(&norm(from, to))
        .unwrap_or_else(|| panic!("missing subdivision path {from}-{to}"))
        .clone();
    if path[0] == from {
        path
    } else {
        let mut p = path;
        p.reverse();
        p
    }
}

// ---------------------------------------------------------------------
// Certificate validation
// ---------------------------------------------------------------------

fn check_embedding(g: &Graph, emb: &Embedding) -> Result<(), &'static str> {
    let n = g.vertex_count();
    if emb.rotation.len() != n {
        return Err("rotation table size mismatch");
    }
    for v in 0..n {
        let mut sorted = emb.rotation[v].clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err("rotation is not a permutation of the neighbors");
        }
    }

    // Face tracing: the dart after (u -> v) leaves v toward the neighbor
    // after u in v's rotation.
    let index_of: Vec<BTreeMap<usize, usize>> = (0..n)
        .map(|v| {
            emb.rotation[v]
                .iter()
                .enumerate()
                .map(|(i, &u)| (u, i))
                .collect()
        })
        .collect();
    let mut faces_by_comp: BTreeMap<usize, isize> = BTreeMap::new();
    let comp_of = component_ids(g);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for u in 0..n {
        for &v in g.neighbors(u) {
            if seen.contains(&(u, v)) {
                continue;
            }
            let (mut cu, mut cv) = (u, v);
            loop {
                if !seen.insert((cu, cv)) {
                    return Err("face tracing revisited a dart");
                }
                let idx = index_of[cv][&cu];
                let next = emb.rotation[cv][(idx + 1) % emb.rotation[cv].len()];
                let (nu, nv) = (cv, next);
                if (nu, nv) == (u, v) {
                    break;
                }
                cu = nu;
                cv = nv;
            }
            *faces_by_comp.entry(comp_of[u]).or_insert(0) += 1;
        }
    }

    for comp in g.components() {
        let vc = comp.len() as isize;
        let ec = comp
            .iter()
            .map(|&u| g.degree(u))
            .sum::<usize>() as isize
            / 2;
        if ec == 0 {
            continue;
        }
        let fc = *faces_by_comp.get(&comp_of[comp[0]]).unwrap_or(&0);
        if vc - ec + fc != 2 {
            return Err("Euler's relation fails on a component");
        }
    }
    Ok(())
}

fn component_ids(g: &Graph) -> Vec<usize> {
    let mut id = vec![usize::MAX; g.vertex_count()];
    for (ci, comp) in g.components().into_iter().enumerate() {
        for v in comp {
            id[v] = ci;
        }
    }
    id
}

fn check_obstruction(g: &Graph, obs: &Obstruction) -> Result<(), &'static str> {
    let n = g.vertex_count();
    let expected_pairs: Vec<(usize, usize)> = match obs.kind {
        ObstructionKind::K5 => {
            if obs.branch.len() != 5 || obs.paths.len() != 10 {
                return Err("K5 needs 5 branch vertices and 10 paths");
            }
            (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .collect()
        }
        ObstructionKind::K33 => {
            if obs.branch.len() != 6 || obs.paths.len() != 9 {
                return Err("K3,3 needs 6 branch vertices and 9 paths");
            }
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()
        }
    };
    let branch_set: BTreeSet<usize> = obs.branch.iter().copied().collect();
    if branch_set.len() != obs.branch.len() || obs.branch.iter().any(|&b| b >= n) {
        return Err("branch vertices must be distinct graph vertices");
    }

    let mut interior_seen: BTreeSet<usize> = BTreeSet::new();
    for (path, &(bi, bj)) in obs.paths.iter().zip(&expected_pairs) {
        if path.len() < 2 {
            return Err("subdivision path too short");
        }
        if path[0] != obs.branch[bi] || *path.last().unwrap() != obs.branch[bj] {
            return Err("path endpoints do not match the branch pattern");
        }
        let mut in_path: BTreeSet<usize> = BTreeSet::new();
        for w in path.windows(2) {
            if w[0] >= n || w[1] >= n || !g.has_edge(w[0], w[1]) {
                return Err("path uses a non-edge");
            }
        }
        for &v in path {
            if !in_path.insert(v) {
                return Err("path repeats a vertex");
            }
        }
        for &v in &path[1..path.len() - 1] {
            if branch_set.contains(&v) {
                return Err("path passes through a branch vertex");
            }
            if !interior_seen.insert(v) {
                return Err("paths share an interior vertex");
            }
        }
    }
    Ok(())
}

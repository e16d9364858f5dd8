use corona_core::random::{random_connected_graph, random_crowns};
use corona_core::{r_edge_corona, r_vertex_corona, DenseSymMatrix, Graph, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instances() -> Vec<(Graph, ChaCha8Rng)> {
    (0..30u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 1 + seed as usize % 6;
            let g = random_connected_graph(&mut rng, n, seed as usize % 5, None);
            (g, rng)
        })
        .collect()
}

fn crown_indicator(rows: usize, crowns: &[Graph]) -> Matrix {
    let total = crowns.iter().map(Graph::n).sum();
    let mut q = Matrix::zeros(rows, total);
    let mut offset = 0;
    for (k, h) in crowns.iter().enumerate() {
        for a in 0..h.n() {
            q[(k, offset + a)] = 1.0;
        }
        offset += h.n();
    }
    q
}

fn shifted_crown_blocks(crowns: &[Graph]) -> DenseSymMatrix {
    let blocks: Vec<DenseSymMatrix> = crowns
        .iter()
        .map(|h| h.laplacian().add(&DenseSymMatrix::identity(h.n())).unwrap())
        .collect();
    DenseSymMatrix::block_diagonal(&blocks)
}

#[test]
fn r_vertex_laplacian_has_the_block_form() {
    for (g, mut rng) in instances() {
        let crowns = random_crowns(&mut rng, g.n(), 3);
        let c = r_vertex_corona(&g, &crowns).unwrap();
        let (n, m) = (g.n(), g.m());
        let b = g.incidence();
        let q = crown_indicator(n, &crowns);
        let p: Vec<f64> = g
            .degrees()
            .iter()
            .zip(&crowns)
            .map(|(&d, h)| (d + h.n()) as f64)
            .collect();
        let top = Matrix::from_diagonal(&p)
            .add(g.laplacian().as_matrix())
            .unwrap();
        let total = q.cols();
        let expect = Matrix::from_blocks(&[
            vec![&top, &b.scale(-1.0), &q.scale(-1.0)],
            vec![
                &b.transpose().scale(-1.0),
                &Matrix::identity(m).scale(2.0),
                &Matrix::zeros(m, total),
            ],
            vec![
                &q.transpose().scale(-1.0),
                &Matrix::zeros(total, m),
                shifted_crown_blocks(&crowns).as_matrix(),
            ],
        ])
        .unwrap();
        assert_eq!(
            c.graph
                .laplacian()
                .as_matrix()
                .max_abs_diff(&expect)
                .unwrap(),
            0.0
        );
    }
}

#[test]
fn r_edge_laplacian_has_the_block_form() {
    for (g, mut rng) in instances() {
        let crowns = random_crowns(&mut rng, g.m(), 3);
        let c = r_edge_corona(&g, &crowns).unwrap();
        let n = g.n();
        let b = g.incidence();
        let mi = crown_indicator(g.m(), &crowns);
        let total = mi.cols();
        let top = g.laplacian().add(&g.degree_matrix()).unwrap();
        let p: Vec<f64> = crowns.iter().map(|h| (2 + h.n()) as f64).collect();
        let expect = Matrix::from_blocks(&[
            vec![top.as_matrix(), &b.scale(-1.0), &Matrix::zeros(n, total)],
            vec![
                &b.transpose().scale(-1.0),
                &Matrix::from_diagonal(&p),
                &mi.scale(-1.0),
            ],
            vec![
                &Matrix::zeros(total, n),
                &mi.transpose().scale(-1.0),
                shifted_crown_blocks(&crowns).as_matrix(),
            ],
        ])
        .unwrap();
        assert_eq!(
            c.graph
                .laplacian()
                .as_matrix()
                .max_abs_diff(&expect)
                .unwrap(),
            0.0
        );
    }
}

#[test]
fn anchors_are_cut_vertices() {
    for (g, mut rng) in instances() {
        let crowns = random_crowns(&mut rng, g.n(), 3);
        let c = r_vertex_corona(&g, &crowns).unwrap();
        for (k, crown) in c.partition.crowns.iter().enumerate() {
            let Some(&w) = crown.first() else { continue };
            let anchor = c.anchor(k).unwrap();
            let cut = c.graph.without_vertex(anchor);
            // Vertex ids above the removed one shift down by one.
            let shift = |v: usize| if v > anchor { v - 1 } else { v };
            let d = cut.bfs_distances(shift(w));
            let other = (0..c.graph.n()).find(|&v| v != anchor && !crown.contains(&v));
            if let Some(o) = other {
                assert!(d[shift(o)].is_none());
            }
        }

        let crowns = random_crowns(&mut rng, g.m(), 3);
        let c = r_edge_corona(&g, &crowns).unwrap();
        for (k, crown) in c.partition.crowns.iter().enumerate() {
            let Some(&w) = crown.first() else { continue };
            let anchor = c.anchor(k).unwrap();
            let cut = c.graph.without_vertex(anchor);
            let shift = |v: usize| if v > anchor { v - 1 } else { v };
            assert!(cut.bfs_distances(shift(w))[shift(0)].is_none());
        }
    }
}

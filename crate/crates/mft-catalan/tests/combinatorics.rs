use mft_catalan::{special_table_count, table_count, CatalanTable, CatalanTuple};
use mft_special::catalan;
use num_bigint::BigUint;

#[test]
fn closed_form_counts() {
    let d: Vec<BigUint> = (0..7).map(table_count).collect();
    let h: Vec<BigUint> = (0..7).map(special_table_count).collect();
    let want_d = [1u32, 2, 7, 30, 143, 728, 3876];
    let want_h = [1u32, 1, 3, 12, 55, 273, 1428];
    assert_eq!(d, want_d.map(BigUint::from));
    assert_eq!(h, want_h.map(BigUint::from));
}

#[test]
fn enumeration_matches_counts() {
    for k in 0..=7u64 {
        let tables = CatalanTable::enumerate(k as usize + 1).unwrap();
        assert_eq!(BigUint::from(tables.len()), table_count(k), "k = {k}");
        let special = tables.iter().filter(|t| t.is_special()).count();
        assert_eq!(BigUint::from(special), special_table_count(k), "k = {k}");
    }
}

#[test]
fn tuple_sets_are_catalan_sized() {
    for k in 0..=9 {
        let c = CatalanTuple::enumerate(k);
        assert_eq!(BigUint::from(c.len()), catalan(k as u64));
        for w in c.windows(2) {
            assert!(w[0] > w[1]);
        }
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for k in 1..=5 {
        let t = CatalanTable::enumerate(k).unwrap();
        for w in t.windows(2) {
            let (a, b) = (w[0].length_tuple(), w[1].length_tuple());
            assert!(a > b || (a == b && w[0].pockets() > w[1].pockets()));
        }
    }
}

#[test]
fn convolution_identity() {
    let c = |n: u32| catalan(n as u64);
    for k in 0..=6u64 {
        let mut s = BigUint::from(0u32);
        for e in CatalanTuple::enumerate(k as usize + 1) {
            let mut term = c(e.entries()[0] - 1);
            for &x in &e.entries()[1..] {
                term *= c(x);
            }
            s += term;
        }
        assert_eq!(s, table_count(k), "k = {k}");
    }
}

#[test]
fn generating_function_relations() {
    // D = sum d_k x^(k+1), H = sum h_k x^(k+1), counted by enumeration
    const ORDER: usize = 8;
    let mut d = vec![0i64; ORDER + 1];
    let mut h = vec![0i64; ORDER + 1];
    for n in 1..=ORDER {
        let t = CatalanTable::enumerate(n).unwrap();
        d[n] = t.len() as i64;
        h[n] = t.iter().filter(|t| t.is_special()).count() as i64;
    }
    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut c = vec![0; ORDER + 1];
        for i in 0..=ORDER {
            for j in 0..=ORDER - i {
                c[i + j] += a[i] * b[j];
            }
        }
        c
    };
    let dd = mul(&d, &d);
    let hd = mul(&h, &d);
    for n in 0..=ORDER {
        assert_eq!(d[n], dd[n] + h[n], "D at x^{n}");
        assert_eq!(h[n], hd[n] + i64::from(n == 1), "H at x^{n}");
    }
}

#[test]
fn every_tuple_factors_uniquely() {
    for k in 1..=7 {
        for e in CatalanTuple::enumerate(k) {
            let (a, b) = e.circ_factors().unwrap();
            assert_eq!(a.circ(&b), e);
            let (a, b) = e.bullet_factors().unwrap();
            assert_eq!(a.bullet(&b), e);
        }
    }
}

#[test]
fn every_table_factors_uniquely() {
    for k in 1..=6 {
        for t in CatalanTable::enumerate(k).unwrap() {
            if !t.pockets()[0].is_empty() {
                let (a, b) = t.lozenge_factors().unwrap();
                assert_eq!(a.lozenge(&b), t);
            }
            if !t.pockets()[1].is_empty() {
                let (a, b) = t.blacklozenge_factors().unwrap();
                assert_eq!(a.blacklozenge(&b), t);
            }
        }
    }
}

#[test]
fn lozenge_and_blacklozenge_cover_all_tables() {
    // beyond <(0),(0)> every table has a nonempty zeroth or first pocket
    for k in 2..=6 {
        for t in CatalanTable::enumerate(k).unwrap() {
            let l = !t.pockets()[0].is_empty();
            let b = !t.pockets()[1].is_empty();
            assert!(l || b, "{t}");
        }
    }
}

#[test]
fn printed_examples() {
    let big = CatalanTable::from_entries(&[&[2, 0, 0], &[0], &[0], &[1, 0], &[0]]).unwrap();
    let a = CatalanTable::from_entries(&[&[1, 0], &[0], &[0]]).unwrap();
    let b = CatalanTable::from_entries(&[&[0], &[1, 0], &[0]]).unwrap();
    assert_eq!(a.lozenge(&b), big);
    assert_eq!(big.lozenge_factors().unwrap(), (a.clone(), b.clone()));

    let boxed = CatalanTable::from_entries(&[&[0], &[2, 1, 0, 0], &[0], &[0], &[0]]).unwrap();
    assert_eq!(b.blacklozenge(&a), boxed);
    assert_eq!(boxed.blacklozenge_factors().unwrap(), (b.clone(), a));

    let base = CatalanTable::from_entries(&[&[0], &[0]]).unwrap();
    let t = CatalanTable::from_entries(&[&[0], &[2, 0, 0], &[0], &[0]]).unwrap();
    assert_eq!(b.blacklozenge(&base), t);
    assert_eq!(t.to_string(), "<(0),(2,0,0),(0),(0)>");
}

use stringlink::diagram::{commutator, hopf, whitehead};
use stringlink::magnus::MilnorEngine;

#[test]
fn dump_whitehead_table() {
    let d = whitehead();
    let engine = MilnorEngine::new(&d, 3).unwrap();
    println!("presentation:\n{}", engine.presentation().dump());
    for j in 1..=2 {
        println!("longitude {}: {}", j, engine.longitude(j));
    }
    for seq in [
        vec![1, 2],
        vec![1, 1, 2],
        vec![1, 2, 2],
        vec![1, 2, 1],
        vec![2, 1, 1],
        vec![1, 1, 2, 2],
        vec![1, 2, 2, 1],
        vec![2, 2, 1, 1],
        vec![2, 1, 1, 2],
        vec![1, 2, 1, 2],
        vec![2, 1, 2, 1],
    ] {
        let m = engine.mu(&seq).unwrap();
        let del = engine.delta(&seq).unwrap();
        println!("mu({seq:?}) = {m}  delta = {del}");
    }

    // Borromean commutator of pure braid generators.
    let a12 = stringlink::braid::pure_generator(1, 2, 3).unwrap();
    let a23 = stringlink::braid::pure_generator(2, 3, 3).unwrap();
    let b = a12
        .compose(&a23)
        .unwrap()
        .compose(&a12.inverse())
        .unwrap()
        .compose(&a23.inverse())
        .unwrap();
    let bd = b.to_slice_word().validate().unwrap();
    let be = MilnorEngine::new(&bd, 2).unwrap();
    println!(
        "borromean mu(123) = {}, mu(231) = {}, mu(312) = {}",
        be.mu(&[1, 2, 3]).unwrap(),
        be.mu(&[2, 3, 1]).unwrap(),
        be.mu(&[3, 1, 2]).unwrap()
    );

    // The paper's commutator.
    let c = commutator(&hopf(), &whitehead()).unwrap();
    let ce = MilnorEngine::new(&c, 3).unwrap();
    println!(
        "C = [hopf, whitehead]: mu(1122) = {}, delta = {}, mu(2211) = {}",
        ce.mu(&[1, 1, 2, 2]).unwrap(),
        ce.delta(&[1, 1, 2, 2]).unwrap(),
        ce.mu(&[2, 2, 1, 1]).unwrap()
    );
}

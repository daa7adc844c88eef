macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(generate_binary);
example!(generate_kary);
example!(successor_rule);
example!(verify_sequence);
example!(cut_plan);
example!(counting);
example!(lyndon_rank);
example!(main_cycle);

#[test]
fn generate_binary_runs() {
    assert_eq!(generate_binary::run_example().unwrap(), "0000011110011100011011010011000010110010100010");
}

#[test]
fn generate_kary_runs() {
    let all = generate_kary::run_example().unwrap();
    assert_eq!(all.len(), 54);
    assert!(all.iter().enumerate().all(|(i, s)| s.len() == 28 + i));
}

#[test]
fn successor_rule_runs() {
    let (a, b) = successor_rule::run_example().unwrap();
    let doubled = format!("{a}{a}");
    assert!(doubled.contains(&b));
}

#[test]
fn verify_sequence_runs() {
    let [good, bad] = verify_sequence::run_example().unwrap();
    assert!(good.ok);
    assert_eq!(bad.first_duplicate.unwrap().positions, [4, 5]);
}

#[test]
fn cut_plan_runs() {
    let rows = cut_plan::run_example().unwrap();
    let (p, markers) = &rows[0];
    assert_eq!((p.m, p.h, p.t, p.s), (4, 6, 1, 5));
    assert_eq!(markers, &["001001", "010101"]);
}

#[test]
fn counting_runs() {
    let rows = counting::run_example().unwrap();
    assert_eq!(rows[3], (3, 20, 3));
}

#[test]
fn lyndon_rank_runs() {
    let rows = lyndon_rank::run_example().unwrap();
    assert_eq!(rows[0], ("0000001111".to_string(), 1));
}

#[test]
fn main_cycle_runs() {
    assert_eq!(main_cycle::run_example().unwrap(), "000000111100111000110110100110000101100101010001001");
}

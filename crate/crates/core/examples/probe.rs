use num_complex::Complex64;
use std::f64::consts::PI;
use tfa_core::tfr::*;
fn main() {
    let l = 64usize;
    let li = l as i64;
    let a = 2i64;
    let f = GridSignal::gaussian(l);
    let phi = GridSignal::gaussian(l);
    let dilate = |s: &GridSignal| {
        let samples: Vec<Complex64> = (0..li)
            .map(|j| {
                let idx = a * (j - li / 2);
                if (-li / 2..li / 2).contains(&idx) { s.samples()[(idx + li / 2) as usize] } else { Complex64::ZERO }
            })
            .collect();
        GridSignal::new(samples, s.step()).unwrap()
    };
    let fa = dilate(&f); let pa = dilate(&phi);
    let lhs = stft(&fa, &pa).unwrap();
    let rhs = stft(&f, &phi).unwrap();
    let band = li / (2 * a.abs());
    let mut worst = (0.0f64, 0usize, 0usize);
    for m in 0..l {
        if (m as i64 - li/2).abs() > band { continue; }
        for n in 0..l {
            let k = n as i64 - li / 2;
            if k % a != 0 { continue; }
            let expect = 0.5 * rhs.get_wrapped(a * (m as i64 - li / 2) + li / 2, k / a + li / 2);
            let err = (lhs.get(m, n) - expect).norm();
            if err > worst.0 { worst = (err, m, n); }
        }
    }
    let (e, m, n) = worst;
    println!("worst {e:.3e} at (m,n)=({m},{n}) x={} xi={}", lhs.x_coord(m), lhs.xi_coord(n));
    println!("lhs={}", lhs.get(m,n));
    let k = n as i64 - li/2;
    println!("exp={}", 0.5 * rhs.get_wrapped(a * (m as i64 - li / 2) + li / 2, k / a + li / 2));
    // continuous quadrature of the dilated side
    let (x, xi) = (lhs.x_coord(m), lhs.xi_coord(n));
    let nq = 40000; let hw = 10.0; let dt = 2.0*hw/nq as f64;
    let mut acc = Complex64::ZERO;
    for q in 0..nq {
        let t = -hw + (q as f64 + 0.5)*dt;
        acc += (-PI*(2.0*t)*(2.0*t)).exp() * (-PI*(2.0*(t-x))*(2.0*(t-x))).exp()
            * Complex64::from_polar(1.0, -2.0*PI*t*xi);
    }
    println!("quad lhs = {}", acc*dt);
}

import init, { rates_explorer, sdof_curve, crypto_histogram } from "./pkg/latsec_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);
const fmt = (x) => (Math.abs(x) >= 1e5 || (x !== 0 && Math.abs(x) < 1e-3) ? x.toExponential(4) : x.toFixed(4));
const COLORS = ["#1f5fa8", "#3a9a4a", "#c0392b"];
const STRIDE = 5;

function guard(errId, fn) {
  try {
    $(errId).textContent = "";
    fn();
  } catch (e) {
    $(errId).textContent = String(e.message ?? e);
  }
}

function showRates() {
  guard("rates-error", () => {
    const v = rates_explorer(num("cross"), num("pdb"), num("gamma"));
    const rows = [
      ["regime", `${v.regime} (ratio ${fmt(v.ratio)})`],
      ["p_t / p_u", `${fmt(v.p_t)} / ${fmt(v.p_u)}`],
      ["R1 = R2 <", fmt(v.r1)],
      ["r_comb_1, r_comb_2", `${fmt(v.r_comb_1)}, ${fmt(v.r_comb_2)}`],
      ["secrecy penalty", fmt(v.penalty1)],
      ["best a, sigma*^2", `${v.best_a}, ${fmt(v.sigma_star_sq)}`],
    ];
    $("rates-table").innerHTML = rows.map(([k, x]) => `<tr><td>${k}</td><td>${x}</td></tr>`).join("");
    v.free();
  });
}

function drawCurve() {
  guard("curve-error", () => {
    const data = sdof_curve(num("ratio"), num("lo"), num("hi"), 60, num("cgamma"));
    const canvas = $("curve-plot");
    const ctx = canvas.getContext("2d");
    const { width: w, height: h } = canvas;
    const pad = 40;
    ctx.clearRect(0, 0, w, h);
    const n = data.length / STRIDE;
    const xs = Array.from({ length: n }, (_, i) => data[i * STRIDE]);
    const series = [1, 2, 3].map((c) => Array.from({ length: n }, (_, i) => data[i * STRIDE + c]));
    const ymax = Math.max(1, ...series.flat());
    const X = (x) => pad + ((x - xs[0]) / (xs[n - 1] - xs[0])) * (w - 2 * pad);
    const Y = (y) => h - pad - (y / ymax) * (h - 2 * pad);

    ctx.strokeStyle = "#999";
    ctx.fillStyle = "#444";
    ctx.font = "12px sans-serif";
    ctx.beginPath();
    ctx.moveTo(pad, pad / 2);
    ctx.lineTo(pad, h - pad);
    ctx.lineTo(w - pad / 2, h - pad);
    ctx.stroke();
    for (let t = Math.ceil(xs[0]); t <= xs[n - 1]; t++) {
      ctx.fillText(`1e${t}`, X(t) - 10, h - pad + 16);
    }
    for (let k = 0; k <= 4; k++) {
      const y = (ymax * k) / 4;
      ctx.fillText(y.toFixed(1), 4, Y(y) + 4);
    }
    ctx.fillText("P", w - pad / 2 - 8, h - 8);

    series.forEach((ys, s) => {
      ctx.strokeStyle = COLORS[s];
      ctx.lineWidth = 2;
      ctx.beginPath();
      ys.forEach((y, i) => (i ? ctx.lineTo(X(xs[i]), Y(y)) : ctx.moveTo(X(xs[i]), Y(y))));
      ctx.stroke();
    });
  });
}

function heatmap(canvasId, capId, view, label) {
  const canvas = $(canvasId);
  const ctx = canvas.getContext("2d");
  const f = view.freqs;
  const peak = Math.max(...f);
  const cw = canvas.width / view.cols;
  const ch = canvas.height / view.rows;
  for (let i = 0; i < view.rows; i++) {
    for (let j = 0; j < view.cols; j++) {
      const shade = Math.round(255 * (1 - f[i * view.cols + j] / peak));
      ctx.fillStyle = `rgb(${shade},${shade},255)`;
      ctx.fillRect(j * cw, i * ch, cw, ch);
    }
  }
  $(capId).textContent = `${label}: MI ${view.mi_bits.toFixed(4)} bits, KS ${view.ks.toFixed(4)}`;
}

function drawCrypto() {
  guard("crypto-error", () => {
    const args = [num("k"), num("samples"), num("seed")];
    const masked = crypto_histogram(...args, true);
    const broken = crypto_histogram(...args, false);
    heatmap("masked", "masked-cap", masked, "jammed");
    heatmap("broken", "broken-cap", broken, "no jamming");
    masked.free();
    broken.free();
  });
}

await init();
for (const id of ["cross", "pdb", "gamma"]) $(id).addEventListener("input", showRates);
for (const id of ["ratio", "lo", "hi", "cgamma"]) $(id).addEventListener("input", drawCurve);
for (const id of ["k", "samples", "seed"]) $(id).addEventListener("change", drawCrypto);
showRates();
drawCurve();
drawCrypto();

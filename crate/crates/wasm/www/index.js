import init, { analyzeGraph, biasHistogram, katzSweep } from "./pkg/paradox_lab_wasm.js";

const $ = (id) => document.getElementById(id);

const PRESETS = {
  path: () => edgeText([...Array(5).keys()].map((i) => [i, i + 1])),
  star: () => edgeText([...Array(7).keys()].map((i) => [0, i + 1])),
  lollipop: () => {
    const edges = [];
    for (let i = 0; i < 5; i++) for (let j = i + 1; j < 5; j++) edges.push([i, j]);
    for (let i = 4; i < 9; i++) edges.push([i, i + 1]);
    return edgeText(edges);
  },
  random: () => {
    // random spanning tree plus a few chords
    const n = 12 + Math.floor(Math.random() * 10);
    const edges = [];
    for (let i = 1; i < n; i++) edges.push([Math.floor(Math.random() * i), i]);
    for (let k = 0; k < n / 2; k++) {
      const i = Math.floor(Math.random() * n);
      const j = Math.floor(Math.random() * n);
      if (i !== j) edges.push([Math.min(i, j), Math.max(i, j)]);
    }
    return edgeText(edges);
  },
};

const PARAM_DEFAULTS = { walk_count: 2, katz: 0.85, pagerank: 0.15 };

function edgeText(edges) {
  return edges.map(([i, j]) => `${i} ${j}`).join("\n") + "\n";
}

function fmt(x) {
  return Number.isFinite(x) ? x.toPrecision(6) : String(x);
}

function call(errorBox, fn) {
  errorBox.textContent = "";
  try {
    return JSON.parse(fn());
  } catch (e) {
    errorBox.textContent = String(e);
    return null;
  }
}

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

function drawGraph(result) {
  const canvas = $("graph-canvas");
  const ctx = clear(canvas);
  const { nodes, edges } = result;
  const n = nodes.length;
  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  const radius = Math.min(cx, cy) - 40;
  const pos = nodes.map((_, i) => {
    const t = (2 * Math.PI * i) / n - Math.PI / 2;
    return [cx + radius * Math.cos(t), cy + radius * Math.sin(t)];
  });
  ctx.strokeStyle = "#bbb";
  for (const [i, j] of edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[i]);
    ctx.lineTo(...pos[j]);
    ctx.stroke();
  }
  const top = Math.max(...nodes.map((row) => Math.abs(row.r))) || 1;
  nodes.forEach((row, i) => {
    const size = 5 + 14 * Math.sqrt(Math.abs(row.r) / top);
    ctx.beginPath();
    ctx.arc(...pos[i], size, 0, 2 * Math.PI);
    ctx.fillStyle = row.delta > 1e-12 ? "#d9534f" : row.delta < -1e-12 ? "#337ab7" : "#999";
    ctx.fill();
    ctx.fillStyle = "#222";
    ctx.font = "11px sans-serif";
    ctx.fillText(String(row.id), pos[i][0] + size + 2, pos[i][1] - size);
  });
}

function showStats(result) {
  const rows = [
    ["nodes / edges", `${result.n} / ${result.m}`],
    ["μ (node mean)", fmt(result.mu)],
    ["μ̄ (neighbor mean)", fmt(result.mu_bar)],
    ["μ̃ (edge-sampled mean)", fmt(result.mu_tilde)],
    ["μ̄ − μ", fmt(result.slack)],
    ["paradox holds", result.paradox_holds ? "yes" : "no"],
    ["regular", result.regular ? "yes" : "no"],
  ];
  $("stats").innerHTML = rows.map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`).join("");
}

function analyze() {
  const result = call($("graph-error"), () =>
    analyzeGraph($("edges").value, $("measure").value, Number($("param").value)),
  );
  if (result) {
    drawGraph(result);
    showStats(result);
  }
}

function drawHistogram(result) {
  const canvas = $("bias-canvas");
  const ctx = clear(canvas);
  const bins = result.bins;
  if (bins.length === 0) return;
  const pad = 30;
  const lo = bins[0].lo;
  const hi = bins[bins.length - 1].hi;
  const span = hi - lo || 1;
  const peak = Math.max(...bins.map((b) => b.count)) || 1;
  const x = (v) => pad + ((v - lo) / span) * (canvas.width - 2 * pad);
  const y = (c) => canvas.height - pad - (c / peak) * (canvas.height - 2 * pad);
  for (const b of bins) {
    ctx.fillStyle = b.hi <= 0 ? "#337ab7" : b.lo >= 0 ? "#d9534f" : "#999";
    ctx.fillRect(x(b.lo), y(b.count), Math.max(1, x(b.hi) - x(b.lo) - 1), canvas.height - pad - y(b.count));
  }
  if (lo < 0 && hi > 0) {
    ctx.strokeStyle = "#222";
    ctx.beginPath();
    ctx.moveTo(x(0), pad / 2);
    ctx.lineTo(x(0), canvas.height - pad);
    ctx.stroke();
  }
  ctx.fillStyle = "#222";
  ctx.font = "11px sans-serif";
  ctx.fillText(fmt(lo), pad, canvas.height - 10);
  ctx.fillText(fmt(hi), canvas.width - pad - 40, canvas.height - 10);
  $("bias-summary").textContent =
    `${result.samples} node samples · mean bias ${fmt(result.mean)} · ` +
    `${(100 * result.fraction_negative).toFixed(1)}% below their neighbors`;
}

function runBias() {
  const measure = $("bias-measure").value;
  const result = call($("bias-error"), () =>
    biasHistogram(
      Number($("bias-n").value),
      Number($("bias-p").value),
      Number($("bias-graphs").value),
      Number($("bias-seed").value),
      measure,
      PARAM_DEFAULTS[measure] ?? 0,
    ),
  );
  if (result) drawHistogram(result);
}

function drawSweep(points) {
  const canvas = $("sweep-canvas");
  const ctx = clear(canvas);
  const pad = 36;
  const series = [
    ["mu", "#999", "μ"],
    ["mu_bar", "#d9534f", "μ̄"],
    ["mu_tilde", "#337ab7", "μ̃"],
  ];
  const values = points.flatMap((p) => series.map(([k]) => p[k]));
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const x = (f) => pad + f * (canvas.width - 2 * pad);
  const y = (v) => canvas.height - pad - ((v - lo) / (hi - lo || 1)) * (canvas.height - 2 * pad);
  series.forEach(([key, color, label], k) => {
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    points.forEach((p, i) => (i ? ctx.lineTo(x(p.fraction), y(p[key])) : ctx.moveTo(x(p.fraction), y(p[key]))));
    ctx.stroke();
    ctx.fillStyle = color;
    ctx.font = "13px sans-serif";
    ctx.fillText(label, pad + 8 + 28 * k, pad - 12);
  });
  ctx.fillStyle = "#222";
  ctx.font = "11px sans-serif";
  ctx.fillText("α·λ₁ →", canvas.width - pad - 40, canvas.height - 10);
  ctx.fillText(fmt(hi), 2, pad);
  ctx.fillText(fmt(lo), 2, canvas.height - pad);
}

function runSweep() {
  const points = call($("sweep-error"), () => katzSweep($("edges").value, Number($("sweep-steps").value)));
  if (points) drawSweep(points);
}

await init();

document.querySelectorAll("[data-preset]").forEach((button) =>
  button.addEventListener("click", () => {
    $("edges").value = PRESETS[button.dataset.preset]();
    analyze();
  }),
);
$("measure").addEventListener("change", () => {
  const m = $("measure").value;
  $("param").disabled = !(m in PARAM_DEFAULTS);
  if (m in PARAM_DEFAULTS) $("param").value = PARAM_DEFAULTS[m];
});
$("analyze").addEventListener("click", analyze);
$("bias-run").addEventListener("click", runBias);
$("sweep-run").addEventListener("click", runSweep);

$("edges").value = PRESETS.lollipop();
analyze();
runBias();
runSweep();

import init, { generate, product, classify, roots } from "./pkg/kpoly_web.js";

const $ = (id) => document.getElementById(id);
const info = (text) => { $("info").textContent = text; };

function draw(d, caption) {
  const size = 320;
  const fig = document.createElement("figure");
  const canvas = document.createElement("canvas");
  canvas.width = canvas.height = size;
  const ctx = canvas.getContext("2d");
  const at = ([x, y]) => [20 + x * (size - 40), 20 + y * (size - 40)];
  ctx.strokeStyle = "#555";
  for (const [u, v] of d.edges) {
    ctx.beginPath();
    ctx.moveTo(...at(d.positions[u]));
    ctx.lineTo(...at(d.positions[v]));
    ctx.stroke();
  }
  ctx.font = "10px monospace";
  d.positions.forEach((p, v) => {
    const [x, y] = at(p);
    ctx.fillStyle = "#1f5fa8";
    ctx.beginPath();
    ctx.arc(x, y, 4, 0, 2 * Math.PI);
    ctx.fill();
    if (d.n <= 40) {
      ctx.fillStyle = "#222";
      ctx.fillText(d.labels[v], x + 5, y - 5);
    }
  });
  const cap = document.createElement("figcaption");
  cap.textContent = `${caption}: n=${d.n}, ${d.polyhedral ? "polyhedral" : "not polyhedral"}, ${d.graph6}`;
  fig.append(canvas, cap);
  $("views").append(fig);
}

function guarded(f) {
  return () => {
    try {
      f();
    } catch (e) {
      info(String(e));
    }
  };
}

function show(d, caption) {
  $("views").replaceChildren();
  draw(d, caption);
}

await init();

$("gen").onclick = guarded(() => {
  const d = JSON.parse(generate($("family").value, $("params").value));
  $("g6").value = d.graph6;
  show(d, $("family").value);
  info("");
});

$("cover").onclick = guarded(() => {
  const d = JSON.parse(product("cover", $("g6").value, ""));
  show(d, "cover");
  info(`cover has ${d.n} vertices and ${d.edges.length} edges`);
});

$("classify").onclick = guarded(() => {
  info(JSON.stringify(JSON.parse(classify($("g6").value)), null, 2));
});

$("roots").onclick = guarded(() => {
  const rs = JSON.parse(roots($("g6").value));
  $("views").replaceChildren();
  rs.forEach((d, k) => draw(d, `root ${k + 1}`));
  info(`${rs.length} root(s)`);
});

import init, { toric, rectifyLine, factor } from "./pkg/torplane_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function show(id, f) {
  const out = $(id);
  try {
    out.textContent = f();
    out.className = "";
  } catch (e) {
    out.textContent = e.message ?? String(e);
    out.className = "err";
  }
}

function wire(button, enter, run) {
  $(button).addEventListener("click", run);
  for (const id of enter) {
    $(id).addEventListener("keydown", (ev) => { if (ev.key === "Enter") run(); });
  }
}

await init();

const num = (id) => Number.parseInt($(id).value, 10);

const runToric = () => show("t-out", () => toric(num("t-d"), num("t-e"), num("t-a"), num("t-b")));
const runRectify = () => show("r-out", () => rectifyLine($("r-u").value, $("r-v").value, $("r-g").value.trim()));
const runFactor = () => show("f-out", () => factor($("f-u").value, $("f-v").value));

wire("t-run", ["t-d", "t-e", "t-a", "t-b"], runToric);
wire("r-run", ["r-u", "r-v", "r-g"], runRectify);
wire("f-run", ["f-u", "f-v"], runFactor);

runToric();
runRectify();
runFactor();

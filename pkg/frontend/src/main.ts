import { CalcApi } from "./api.js";
import { CalculatorApp } from "./app.js";

document.addEventListener("DOMContentLoaded", () => {
  const root = document.getElementById("app");
  if (root) new CalculatorApp(root, new CalcApi());
});

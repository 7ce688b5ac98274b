// expect: reported=1 refuted=0 kind=true
int ratio(char a, char b) {
  if (a > 0)
    return a / b;
  return 0;
}

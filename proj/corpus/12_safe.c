// expect: reported=0 refuted=0 kind=safe
int safe(char a) {
  int d = 1;
  int x = 5;
  int *q = &x;
  if (a > 10)
    d = a;
  *q = 7;
  return 100 / d + 100 / (x - 6);
}

// placeholder; full CLI added with the driver modules
int main() { return 0; }

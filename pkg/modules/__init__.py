# modules package
